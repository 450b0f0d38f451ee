//! Verification suites. Each returns a [`Report`] counting every instance
//! checked; a correct engine produces zero violations.

use specht_core::multipartition::enumerate_multicompositions;
use specht_core::tableau::{comp_leq, enumerate_std, pair_dominates, strong_dominates};
use specht_core::{block_of, enumerate_multipartitions, Multipartition, Permutation, Report, Tableau};

use crate::algebra::{Element, Engine};
use crate::bases::{all_standard, CellBasis};
use crate::error::HeckeError;
use crate::klr::KlrIdempotents;
use crate::linalg::Matrix;
use crate::model::SeminormalModel;
use crate::params::HeckeParams;
use crate::scalar::Scalar;
use crate::seminormal::Seminormal;

fn pair(s: &Tableau, t: &Tableau) -> String {
    format!("({s}, {t})")
}

/// `(u,v) ⧐ (s,t)` and `(u,v) ≠ (s,t)`.
fn strictly_strong(u: &(Tableau, Tableau), s: &(Tableau, Tableau)) -> bool {
    u != s && strong_dominates((&u.0, &u.1), (&s.0, &s.1))
}

/// Everything the semisimple suites share.
pub struct Semisimple {
    pub engine: Engine,
    pub m: CellBasis,
    pub seminormal: Seminormal,
    pub f: CellBasis,
}

impl Semisimple {
    pub fn new(params: HeckeParams) -> Result<Self, HeckeError> {
        if params.is_degenerate() {
            return Err(HeckeError::WrongMode("rational with ξ ≠ 1"));
        }
        params.check_semisimple()?;
        let engine = Engine::new(params);
        let m = CellBasis::murphy_m(&engine)?;
        let seminormal = Seminormal::new(&engine)?;
        let f = seminormal.f_basis(&engine, &m)?;
        Ok(Semisimple {
            engine,
            m,
            seminormal,
            f,
        })
    }

    fn report(&self, suite: &str) -> Report {
        Report::new(suite, self.engine.params().describe())
    }
}

/// Unitriangularity of `m ↔ f` with respect to `⧐`, and the eigenvector
/// property `f_uv L_k = cont_v(k) f_uv`.
pub fn strong(ctx: &Semisimple) -> Report {
    let e = &ctx.engine;
    let p = e.params();
    let mut r = ctx.report("strong");
    let mut off_diagonal = 0u64;
    for (i, ((u, v), f)) in ctx.f.index.iter().zip(&ctx.f.elements).enumerate() {
        for k in 1..=e.n() {
            let lhs = e.multiply(f, &e.l(k));
            r.check(lhs == f.scale(&p.content(v, k)), || {
                format!("f{} L_{k} is not cont_v({k}) f", pair(u, v))
            });
        }
        let idx = &ctx.m.index[i];
        // f_st in the m-basis, and m_st in the f-basis
        let expansions = [
            ("f in m", ctx.m.coordinates(e, f)),
            ("m in f", ctx.f.coordinates(e, &ctx.m.elements[i])),
        ];
        for (what, coords) in expansions {
            for (j, c) in coords.iter().enumerate() {
                let other = &ctx.m.index[j];
                if j == i {
                    r.check(c.is_one(), || {
                        format!("{what}: diagonal coefficient {c} at {}", pair(&idx.0, &idx.1))
                    });
                } else if !c.is_zero() {
                    off_diagonal += 1;
                    r.check(strictly_strong(other, idx), || {
                        format!(
                            "{what}: coefficient {c} at {} for {} outside the strong cone",
                            pair(&other.0, &other.1),
                            pair(&idx.0, &idx.1)
                        )
                    });
                } else {
                    r.check(true, String::new);
                }
            }
        }
    }
    r.note(format!("{off_diagonal} nonzero off-diagonal transition coefficients"));
    r
}

/// `m_st n_uv ≠ 0 ⟹ u' ⊵ t` and `n_uv m_st ≠ 0 ⟹ v' ⊵ s`, over all pairs of
/// basis elements.
pub fn tilting(ctx: &Semisimple) -> Result<Report, HeckeError> {
    let e = &ctx.engine;
    let n = CellBasis::murphy_n(e)?;
    let mut r = ctx.report("tilting");
    let m_vecs: Vec<Vec<Scalar>> = ctx.m.elements.iter().map(|x| e.to_vector(x)).collect();
    let n_vecs: Vec<Vec<Scalar>> = n.elements.iter().map(|x| e.to_vector(x)).collect();
    let mut nonzero = 0u64;
    // coords(x y) = coords(x) · left_matrix(y)
    for ((u, v), y) in n.index.iter().zip(&n.elements) {
        let right_by_n = e.left_matrix(y);
        let uc = u.conjugate();
        for ((s, t), x) in ctx.m.index.iter().zip(&m_vecs) {
            let prod = crate::linalg::vec_mul(e.field(), x, &right_by_n);
            if prod.iter().any(|c| !c.is_zero()) {
                nonzero += 1;
                r.check(uc.dominates(t), || {
                    format!("m{} n{} ≠ 0 but u' does not dominate t", pair(s, t), pair(u, v))
                });
            } else {
                r.check(true, String::new);
            }
        }
    }
    for ((s, t), x) in ctx.m.index.iter().zip(&ctx.m.elements) {
        let right_by_m = e.left_matrix(x);
        for ((u, v), y) in n.index.iter().zip(&n_vecs) {
            let prod = crate::linalg::vec_mul(e.field(), y, &right_by_m);
            if prod.iter().any(|c| !c.is_zero()) {
                nonzero += 1;
                r.check(v.conjugate().dominates(s), || {
                    format!("n{} m{} ≠ 0 but v' does not dominate s", pair(u, v), pair(s, t))
                });
            } else {
                r.check(true, String::new);
            }
        }
    }
    r.note(format!("{nonzero} nonzero products among {} ordered pairs", r.checked));
    Ok(r)
}

fn leading_term_checks(
    r: &mut Report,
    e: &Engine,
    basis: &CellBasis,
    label: &str,
    leading: impl Fn(&Tableau, usize) -> Scalar,
) {
    for (i, (idx, x)) in basis.index.iter().zip(&basis.elements).enumerate() {
        for k in 1..=e.n() {
            let coords = basis.coordinates(e, &e.multiply(x, &e.l(k)));
            let want = leading(&idx.1, k);
            r.check(coords[i] == want, || {
                format!(
                    "{label}{} L_{k}: leading coefficient {} instead of {want}",
                    pair(&idx.0, &idx.1),
                    coords[i]
                )
            });
            for (j, c) in coords.iter().enumerate() {
                if j == i || c.is_zero() {
                    continue;
                }
                let other = &basis.index[j];
                let strong = strictly_strong(other, idx);
                r.check(strong, || {
                    format!(
                        "{label}{} L_{k}: term at {} outside the strong cone",
                        pair(&idx.0, &idx.1),
                        pair(&other.0, &other.1)
                    )
                });
                // the weaker cellular-order statement
                r.check(pair_dominates((&other.0, &other.1), (&idx.0, &idx.1)), || {
                    format!(
                        "{label}{} L_{k}: term at {} not above in the cellular order",
                        pair(&idx.0, &idx.1),
                        pair(&other.0, &other.1)
                    )
                });
            }
        }
    }
}

/// `m_st L_k = cont_t(k) m_st + (⧐-higher terms)` and the `n`-basis
/// analogue with leading coefficient `cont_{t'}(k)`.
pub fn lk_action(ctx: &Semisimple) -> Result<Report, HeckeError> {
    let e = &ctx.engine;
    let p = e.params();
    let mut r = ctx.report("lk-action");
    leading_term_checks(&mut r, e, &ctx.m, "m", |t, k| p.content(t, k));
    let n = CellBasis::murphy_n(e)?;
    leading_term_checks(&mut r, e, &n, "n", |t, k| p.content(&t.conjugate(), k));
    Ok(r)
}

fn same_row(t: &Tableau, i: usize, j: usize) -> bool {
    let (a, b) = (t.position(i), t.position(j));
    a.comp == b.comp && a.row == b.row
}

fn same_col(t: &Tableau, i: usize, j: usize) -> bool {
    let (a, b) = (t.position(i), t.position(j));
    a.comp == b.comp && a.col == b.col
}

/// Support of `m_λ` in the seminormal basis for every multicomposition `λ`.
///
/// The column condition is checked in the form "no two entries in one row
/// of `t^λ` share a column of `u` or `v`"; the literal form keyed to the
/// columns of `t^λ` is only counted in the notes.
pub fn mlambda(ctx: &Semisimple) -> Report {
    let e = &ctx.engine;
    let n = e.n();
    let mut r = ctx.report("mlambda");
    let mut literal_failures = 0u64;
    let mut literal_checked = 0u64;
    for lam in enumerate_multicompositions(n, e.level()) {
        let tl = Tableau::initial(&lam);
        let coords = ctx.f.coordinates(e, &e.m_lambda(&lam));
        for ((u, v), c) in ctx.f.index.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            let at = || format!("λ = {lam}, a{} = {c}", pair(u, v));
            r.check(comp_leq(u, &tl), || format!("{}: comp(u) exceeds comp(t^λ)", at()));
            r.check(comp_leq(v, &tl), || format!("{}: comp(v) exceeds comp(t^λ)", at()));
            for i in 1..=n {
                for j in i + 1..=n {
                    if same_row(&tl, i, j) {
                        r.check(!same_col(u, i, j) && !same_col(v, i, j), || {
                            format!("{}: {i}, {j} share a row of t^λ and a column of u or v", at())
                        });
                    }
                    if same_col(&tl, i, j) {
                        literal_checked += 1;
                        if same_col(u, i, j) || same_col(v, i, j) {
                            literal_failures += 1;
                        }
                    }
                }
            }
            if lam.is_multipartition() {
                r.check(u.dominates(&tl) && v.dominates(&tl), || {
                    format!("{}: not in the strong cone of (t^λ, t^λ)", at())
                });
            }
        }
    }
    r.note(format!(
        "column condition keyed to columns of t^λ: {literal_checked} instances, {literal_failures} failures"
    ));
    r
}

/// Matrix of `m_{t^μ t} ↦ m_{t^μ t} g` on the cell module of `μ`, rows
/// and columns indexed by `Std(μ)`. Also checks that nothing lands outside
/// `span{m_{t^μ v}} + H^{⊳μ}`.
pub fn specht_cell_action(
    e: &Engine,
    m: &CellBasis,
    mu: &Multipartition,
    g: &Element,
    report: &mut Report,
) -> Matrix {
    let std = enumerate_std(mu);
    let top = Tableau::initial(mu);
    std.iter()
        .map(|t| {
            let i = m.position(&top, t).expect("basis index");
            let coords = m.coordinates(e, &e.multiply(&m.elements[i], g));
            let mut row = vec![e.field().zero(); std.len()];
            for ((u, v), c) in m.index.iter().zip(&coords) {
                if c.is_zero() {
                    continue;
                }
                if u.shape() == mu && *u == top {
                    let col = std.iter().position(|x| x == v).expect("same shape");
                    row[col] = c.clone();
                } else {
                    report.check(u.shape().strictly_dominates(mu), || {
                        format!("cell {mu}: m(t^μ, {t}) g has a term at {} outside the cell", pair(u, v))
                    });
                }
            }
            row
        })
        .collect()
}

/// The seminormal matrix model against the rewriting engine: defining
/// relations in the model, `tr(T_w)` on the regular representation, and
/// the cell modules built from the Murphy basis.
pub fn cross_model(ctx: &Semisimple) -> Result<Report, HeckeError> {
    let e = &ctx.engine;
    let p = e.params();
    let field = e.field();
    let model = SeminormalModel::new(p)?;
    let mut r = ctx.report("cross-model");
    let (checked, failures) = model.relation_failures();
    for i in 0..checked {
        let msg = failures.get(i as usize).cloned();
        r.check(msg.is_none(), || msg.clone().unwrap_or_default());
    }
    let perms = Permutation::all(e.n());
    for w in &perms {
        let engine_tr = e.regular_trace(&e.t_perm(w));
        let model_tr = model.regular_trace(w);
        r.check(engine_tr == model_tr, || {
            format!("tr(T_{w}): engine {engine_tr}, model {model_tr}")
        });
    }
    for block in &model.blocks {
        let mu = &block.shape;
        let std = enumerate_std(mu);
        r.check(std.len() == block.basis.len(), || format!("cell {mu}: dimension"));
        for k in 1..=e.n() {
            let rho = specht_cell_action(e, &ctx.m, mu, &e.l(k), &mut r);
            for (a, t) in std.iter().enumerate() {
                r.check(rho[a][a] == p.content(t, k), || {
                    format!("cell {mu}: L_{k} diagonal at {t} is {}", rho[a][a])
                });
                for (b, v) in std.iter().enumerate() {
                    if b != a && !rho[a][b].is_zero() {
                        r.check(v.dominates(t), || {
                            format!("cell {mu}: L_{k} not triangular at ({t}, {v})")
                        });
                    }
                }
            }
        }
        if e.level() == 1 && mu.components()[0].len() == 1 {
            for i in 1..e.n() {
                let rho = specht_cell_action(e, &ctx.m, mu, &e.t(i), &mut r);
                r.check(rho == vec![vec![p.xi().clone()]], || {
                    format!("cell {mu}: T_{i} does not act as ξ")
                });
            }
        }
        for w in &perms {
            let rho = specht_cell_action(e, &ctx.m, mu, &e.t_perm(w), &mut r);
            let cell_tr = crate::linalg::trace(field, &rho);
            let model_tr = crate::linalg::trace(field, &model.t_perm(block, w));
            r.check(cell_tr == model_tr, || {
                format!("cell {mu}: tr(T_{w}) is {cell_tr}, model says {model_tr}")
            });
        }
    }
    Ok(r)
}

/// KLR idempotents, nilpotents and blocks for the degenerate algebra over
/// `F_p`.
pub fn klr(params: HeckeParams) -> Result<Report, HeckeError> {
    let mut r = Report::new("klr", params.describe());
    let n = params.n();
    let level = params.level();
    let e = Engine::new(params);
    let k = KlrIdempotents::new(&e)?;
    let quiver = k.quiver().clone();
    r.note(format!("projection exponent {}", k.exponent()));
    let sum = k.idempotents.iter().fold(Element::zero(), |acc, x| acc.add(x));
    r.check(sum == e.one(), || "Σ e(i) ≠ 1".into());
    for (a, ea) in k.idempotents.iter().enumerate() {
        for (b, eb) in k.idempotents.iter().enumerate() {
            if ea.is_zero() || eb.is_zero() {
                continue;
            }
            let prod = e.multiply(ea, eb);
            let ok = if a == b { &prod == ea } else { prod.is_zero() };
            r.check(ok, || {
                format!("e({:?}) e({:?}) is wrong", k.sequences[a], k.sequences[b])
            });
        }
    }
    let tableaux = all_standard(n, level);
    for (seq, x) in k.sequences.iter().zip(&k.idempotents) {
        let realized: Vec<&Tableau> = tableaux
            .iter()
            .filter(|t| &t.residue_sequence(&quiver) == seq)
            .collect();
        r.check(x.is_zero() == realized.is_empty(), || {
            format!("e({seq:?}) zero = {}, realized by {} tableaux", x.is_zero(), realized.len())
        });
        let beta = specht_core::blocks::block_of_residues(seq.iter().copied());
        for t in realized {
            r.check(block_of(t.shape(), &quiver) == beta, || {
                format!("res({t}) = {seq:?} but its shape lies in another block")
            });
        }
    }
    let dim = e.dim() as u64;
    for rr in 1..=n {
        let y = k.y(&e, rr);
        r.check(e.pow(&y, dim).is_zero(), || format!("y_{rr} is not nilpotent"));
        for (seq, x) in k.sequences.iter().zip(&k.idempotents) {
            if x.is_zero() {
                continue;
            }
            r.check(e.commutator(&y, x).is_zero(), || {
                format!("y_{rr} does not commute with e({seq:?})")
            });
            if rr == 1 {
                let power = quiver.lambda_pairing(seq[0]) as u64;
                let lhs = e.multiply(&e.pow(&y, power), x);
                r.check(lhs.is_zero(), || {
                    format!("y_1^{power} e({seq:?}) ≠ 0")
                });
            }
        }
    }
    let blocks = k.block_idempotents();
    let realized_blocks: std::collections::BTreeSet<_> = enumerate_multipartitions(n, level)
        .iter()
        .map(|mu| block_of(mu, &quiver))
        .collect();
    let mut total = Element::zero();
    let gens: Vec<Element> = (1..n).map(|i| e.t(i)).chain((1..=n).map(|i| e.l(i))).collect();
    for (beta, eb) in &blocks {
        total = total.add(eb);
        r.check(eb.is_zero() != realized_blocks.contains(beta), || {
            format!("e_β for β = {beta:?}: zero = {}", eb.is_zero())
        });
        if eb.is_zero() {
            continue;
        }
        r.check(&e.multiply(eb, eb) == eb, || format!("e_β not idempotent for {beta:?}"));
        for (g, x) in gens.iter().enumerate() {
            r.check(e.commutator(eb, x).is_zero(), || {
                format!("e_β for {beta:?} does not commute with generator {g}")
            });
        }
    }
    r.check(total == e.one(), || "Σ e_β ≠ 1".into());
    r.note(format!(
        "{} nonzero idempotents in {} blocks",
        k.idempotents.iter().filter(|x| !x.is_zero()).count(),
        blocks.values().filter(|x| !x.is_zero()).count()
    ));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_semisimple_suites_pass() {
        for (n, level) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let ctx = Semisimple::new(HeckeParams::semisimple(n, level)).unwrap();
            for rep in [
                strong(&ctx),
                tilting(&ctx).unwrap(),
                lk_action(&ctx).unwrap(),
                mlambda(&ctx),
                cross_model(&ctx).unwrap(),
            ] {
                assert!(rep.checked > 0, "{rep}");
                assert!(rep.passed(), "{rep}: {:?}", rep.violations);
            }
        }
    }

    #[test]
    fn small_klr_passes() {
        for (p, kappa, n) in [(2, vec![0], 2), (3, vec![0, 1], 2)] {
            let rep = klr(HeckeParams::prime(p, kappa, n).unwrap()).unwrap();
            assert!(rep.passed(), "{rep}: {:?}", rep.violations);
        }
    }
}
