use num_bigint::BigInt;
use num_rational::BigRational;
use specht_core::{Multipartition, QuiverParams, Tableau};

use crate::error::HeckeError;
use crate::scalar::{is_prime, Field, Scalar};

/// Parameters `(ξ, Q)` of `H_n(ξ, Q)` together with the multicharge they
/// came from.
#[derive(Clone, Debug)]
pub struct HeckeParams {
    field: Field,
    xi: Scalar,
    q: Vec<Scalar>,
    kappa: Vec<i64>,
    n: usize,
}

impl HeckeParams {
    /// `ξ ≠ 1` rational with `Q_l = ξ^{κ_l}`.
    pub fn rational(xi: BigRational, kappa: Vec<i64>, n: usize) -> Result<Self, HeckeError> {
        if kappa.is_empty() {
            return Err(specht_core::Error::EmptyMulticharge.into());
        }
        let xi = Scalar::Rational(xi);
        if xi.is_zero() {
            return Err(HeckeError::XiNotInvertible);
        }
        let q = kappa.iter().map(|&k| xi.pow(k)).collect();
        Ok(HeckeParams {
            field: Field::Rational,
            xi,
            q,
            kappa,
            n,
        })
    }

    /// `ξ = 2` and `κ = ((ℓ−1)(n+1), …, n+1, 0)`, which separates all
    /// standard tableaux by content.
    pub fn semisimple(n: usize, level: usize) -> Self {
        let kappa = (0..level)
            .rev()
            .map(|l| (l * (n + 1)) as i64)
            .collect();
        let params = Self::rational(BigRational::from_integer(BigInt::from(2)), kappa, n)
            .expect("valid parameters");
        debug_assert!(params.check_semisimple().is_ok());
        params
    }

    /// The degenerate algebra `ξ = 1` over `F_p`, with `Q_l = κ_l mod p`.
    /// Its quantum characteristic is `p`.
    pub fn prime(p: u64, kappa: Vec<i64>, n: usize) -> Result<Self, HeckeError> {
        if !is_prime(p) {
            return Err(HeckeError::NotPrime(p));
        }
        if kappa.is_empty() {
            return Err(specht_core::Error::EmptyMulticharge.into());
        }
        let field = Field::Prime(p);
        let q = kappa.iter().map(|&k| field.from_i64(k)).collect();
        Ok(HeckeParams {
            xi: field.one(),
            field,
            q,
            kappa,
            n,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn xi(&self) -> &Scalar {
        &self.xi
    }

    pub fn q(&self) -> &[Scalar] {
        &self.q
    }

    pub fn kappa(&self) -> &[i64] {
        &self.kappa
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> usize {
        self.q.len()
    }

    pub fn is_degenerate(&self) -> bool {
        self.xi.is_one()
    }

    /// The quiver data with `e` equal to the quantum characteristic, when
    /// that is known: `p` for the degenerate prime case, `0` for `ξ = 2`.
    pub fn quiver(&self) -> QuiverParams {
        let e = match self.field {
            Field::Prime(p) => p as u32,
            Field::Rational => 0,
        };
        QuiverParams::new(e, self.kappa.clone()).expect("valid multicharge")
    }

    /// `cont_t(k)`: `ξ^{c−r} Q_l`, or `c − r + Q_l` when `ξ = 1`.
    pub fn content(&self, t: &Tableau, k: usize) -> Scalar {
        let node = t.position(k);
        let diag = node.col as i64 - node.row as i64;
        let q = &self.q[node.comp - 1];
        if self.is_degenerate() {
            &self.field.from_i64(diag) + q
        } else {
            &self.xi.pow(diag) * q
        }
    }

    pub fn contents(&self, t: &Tableau) -> Vec<Scalar> {
        (1..=t.size()).map(|k| self.content(t, k)).collect()
    }

    /// Errors with the first pair of standard tableaux sharing a content
    /// sequence.
    pub fn check_semisimple(&self) -> Result<(), HeckeError> {
        let mut seen: std::collections::HashMap<Vec<Scalar>, Tableau> = Default::default();
        for mu in specht_core::enumerate_multipartitions(self.n, self.level()) {
            for t in specht_core::tableau::enumerate_std(&mu) {
                let c = self.contents(&t);
                if let Some(other) = seen.get(&c) {
                    return Err(HeckeError::ContentCollision {
                        first: other.to_string(),
                        second: t.to_string(),
                    });
                }
                seen.insert(c, t);
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> serde_json::Value {
        serde_json::json!({
            "field": match self.field {
                Field::Rational => "rational".to_string(),
                Field::Prime(p) => format!("F_{p}"),
            },
            "xi": self.xi.to_string(),
            "Q": self.q.iter().map(Scalar::to_string).collect::<Vec<_>>(),
            "kappa": self.kappa,
            "n": self.n,
            "level": self.level(),
        })
    }
}

/// Shapes of size `n` at this level.
pub fn shapes(params: &HeckeParams) -> Vec<Multipartition> {
    specht_core::enumerate_multipartitions(params.n, params.level())
}
