use std::fs::File;
use std::io::{self, BufWriter, Write};

use serde::Serialize;
use serde_json::{json, Value};
use specht_core::tableau::enumerate_std;
use specht_core::verify::{combinatorics_suite, counting_suite, dominance_suite};
use specht_core::{
    dual_induction_filtration, enumerate_multipartitions, graded_dim_induced,
    induction_filtration, parse, QuiverParams, Report,
};
use specht_hecke::suites::{self, Semisimple};
use specht_hecke::{HeckeError, HeckeParams};

use crate::{BranchArgs, EnumerateArgs, Format, Mode, Output, Quiver, VerifyArgs};

pub enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<specht_core::Error> for Failure {
    fn from(e: specht_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<HeckeError> for Failure {
    fn from(e: HeckeError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn charge(q: &Quiver) -> Result<Vec<i64>, Failure> {
    let kappa = match &q.charge {
        Some(s) => parse::parse_charge(s)?,
        None => vec![0; q.level.unwrap_or(1)],
    };
    if let Some(level) = q.level {
        if level != kappa.len() {
            return usage(format!(
                "--level {level} does not match a charge of length {}",
                kappa.len()
            ));
        }
    }
    if kappa.is_empty() {
        return usage("the level must be positive");
    }
    Ok(kappa)
}

fn quiver(q: &Quiver) -> Result<QuiverParams, Failure> {
    Ok(QuiverParams::new(q.e, charge(q)?)?)
}

fn sink(out: &Output) -> Result<Box<dyn Write>, Failure> {
    Ok(match &out.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn json_only(out: &Output, what: &str) -> Result<(), Failure> {
    if out.format == Format::Csv {
        return usage(format!("{what} output is JSON only"));
    }
    Ok(())
}

#[derive(Serialize)]
struct Row {
    shape: Value,
    tableau: Value,
    res: Vec<i64>,
    deg: i64,
    codeg: i64,
}

pub fn enumerate(a: &EnumerateArgs) -> Result<bool, Failure> {
    let params = quiver(&a.quiver)?;
    let sizes: Vec<usize> = match (a.n, a.n_max) {
        (Some(n), _) => vec![n],
        (None, Some(m)) => (0..=m).collect(),
        (None, None) => return usage("give --n or --n-max"),
    };
    let mut w = sink(&a.output)?;
    let mut csv_out = (a.output.format == Format::Csv).then(|| csv::Writer::from_writer(Vec::new()));
    if let Some(c) = csv_out.as_mut() {
        c.write_record(["n", "shape", "tableau", "res", "deg", "codeg"])?;
    }
    for n in sizes {
        for mu in enumerate_multipartitions(n, params.level()) {
            for t in enumerate_std(&mu) {
                let res: Vec<i64> = t.residue_sequence(&params).iter().map(|r| r.value()).collect();
                let (deg, codeg) = (t.degree(&params), t.codegree(&params));
                match csv_out.as_mut() {
                    Some(c) => c.write_record([
                        n.to_string(),
                        mu.to_string(),
                        t.to_string(),
                        res.iter().map(i64::to_string).collect::<Vec<_>>().join(" "),
                        deg.to_string(),
                        codeg.to_string(),
                    ])?,
                    None => {
                        let row = Row {
                            shape: serde_json::to_value(&mu).expect("serializable"),
                            tableau: serde_json::to_value(&t).expect("serializable"),
                            res,
                            deg,
                            codeg,
                        };
                        serde_json::to_writer(&mut w, &row).map_err(io::Error::other)?;
                        writeln!(w)?;
                    }
                }
            }
        }
    }
    if let Some(c) = csv_out {
        w.write_all(&c.into_inner().map_err(|e| io::Error::other(e.to_string()))?)?;
    }
    w.flush()?;
    Ok(true)
}

pub fn branch(a: &BranchArgs) -> Result<bool, Failure> {
    json_only(&a.output, "branch")?;
    let params = quiver(&a.quiver)?;
    let mu = parse::parse_multipartition(&a.shape)?;
    if mu.level() != params.level() {
        return usage(format!(
            "shape has {} components but the level is {}",
            mu.level(),
            params.level()
        ));
    }
    let filtration = if a.dual {
        dual_induction_filtration(&mu, a.residue, &params)
    } else {
        induction_filtration(&mu, a.residue, &params)
    };
    let mut value = serde_json::to_value(&filtration).expect("serializable");
    for (layer, v) in filtration.layers.iter().zip(
        value["layers"]
            .as_array_mut()
            .expect("layers are a list")
            .iter_mut(),
    ) {
        let gd = specht_core::blocks::graded_dim(&layer.shape, &params).shift(layer.shift);
        v["graded_dim"] = serde_json::to_value(gd).expect("serializable");
    }
    let total = if a.dual {
        filtration.graded_dim(&params)
    } else {
        graded_dim_induced(&mu, a.residue, &params)
    };
    value["graded_dim"] = serde_json::to_value(total).expect("serializable");
    value["dual"] = json!(a.dual);
    let mut w = sink(&a.output)?;
    serde_json::to_writer(&mut w, &value).map_err(io::Error::other)?;
    writeln!(w)?;
    w.flush()?;
    Ok(true)
}

fn rational_params(a: &VerifyArgs, n: usize) -> Result<HeckeParams, Failure> {
    if a.mode != Mode::Rational {
        return usage(format!("suite {} needs --mode rational", a.suite));
    }
    if a.p.is_some() {
        return usage("--p only applies to --mode prime");
    }
    if n > 4 || a.quiver.level.unwrap_or(1) > 2 {
        eprintln!("warning: algebra suites beyond n = 4 or ℓ = 2 are untested and slow");
    }
    let params = match &a.quiver.charge {
        None => HeckeParams::semisimple(n, a.quiver.level.unwrap_or(1)),
        Some(_) => {
            let two = num_rational::BigRational::from_integer(2.into());
            HeckeParams::rational(two, charge(&a.quiver)?, n)?
        }
    };
    match params.check_semisimple() {
        Ok(()) => Ok(params),
        Err(e) => usage(format!("rational mode needs content-separating charges: {e}")),
    }
}

pub fn verify(a: &VerifyArgs) -> Result<bool, Failure> {
    json_only(&a.output, "verify")?;
    let algebra_n = a.n.or(a.n_max).unwrap_or(3);
    let report: Report = match a.suite.as_str() {
        "combinatorics" => {
            let params = quiver(&a.quiver)?;
            let n_max = a.n.or(a.n_max).unwrap_or(6);
            if !params.is_separated(n_max + 1) {
                eprintln!(
                    "warning: multicharge {:?} is not separated at rank {}",
                    params.multicharge(),
                    n_max + 1
                );
            }
            combinatorics_suite(&params, n_max)
        }
        "counting" => {
            let level = charge(&a.quiver)?.len();
            counting_suite(level, a.n.or(a.n_max).unwrap_or(5))
        }
        "dominance" => {
            let level = charge(&a.quiver)?.len();
            dominance_suite(a.n.or(a.n_max).unwrap_or(4), level)
        }
        "strong" | "tilting" | "lk-action" | "mlambda" | "cross-model" => {
            let ctx = Semisimple::new(rational_params(a, algebra_n)?)?;
            match a.suite.as_str() {
                "strong" => suites::strong(&ctx),
                "tilting" => suites::tilting(&ctx)?,
                "lk-action" => suites::lk_action(&ctx)?,
                "mlambda" => suites::mlambda(&ctx),
                _ => suites::cross_model(&ctx)?,
            }
        }
        "klr" => {
            if a.mode != Mode::Prime {
                return usage("suite klr needs --mode prime");
            }
            let Some(p) = a.p else {
                return usage("--mode prime needs --p");
            };
            suites::klr(HeckeParams::prime(p, charge(&a.quiver)?, algebra_n)?)?
        }
        other => return usage(format!("unknown suite {other:?}")),
    };
    let mut w = sink(&a.output)?;
    serde_json::to_writer_pretty(&mut w, &report).map_err(io::Error::other)?;
    writeln!(w)?;
    w.flush()?;
    eprintln!("{report}");
    Ok(report.passed())
}
