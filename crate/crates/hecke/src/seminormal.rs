//! Seminormal bases `f_st = F_s m_st F_t` and `g_uv = F_{u'} n_uv F_{v'}`.

use std::collections::BTreeSet;

use specht_core::Tableau;

use crate::algebra::{Element, Engine};
use crate::bases::{all_standard, CellBasis};
use crate::error::HeckeError;
use crate::scalar::Scalar;

/// Idempotents `F_t` for the standard tableaux of size `n`. Requires
/// contents to separate tableaux.
#[derive(Debug)]
pub struct Seminormal {
    tableaux: Vec<Tableau>,
    idempotents: Vec<Element>,
}

impl Seminormal {
    pub fn new(engine: &Engine) -> Result<Self, HeckeError> {
        let params = engine.params();
        params.check_semisimple()?;
        let n = engine.n();
        let tableaux = all_standard(n, engine.level());
        // distinct contents at each position, ordered so the result is
        // deterministic
        let mut per_k: Vec<Vec<Scalar>> = vec![Vec::new(); n + 1];
        for k in 1..=n {
            let mut seen = BTreeSet::new();
            for t in &tableaux {
                let c = params.content(t, k);
                if seen.insert(c.to_string()) {
                    per_k[k].push(c);
                }
            }
        }
        let idempotents = tableaux
            .iter()
            .map(|t| {
                let mut acc = engine.one();
                for (k, contents) in per_k.iter().enumerate().skip(1) {
                    let own = params.content(t, k);
                    for c in contents.iter().filter(|c| **c != own) {
                        let scale = (&own - c).inv();
                        acc = engine.left_l(k, &acc).sub(&acc.scale(c)).scale(&scale);
                    }
                }
                acc
            })
            .collect();
        Ok(Seminormal {
            tableaux,
            idempotents,
        })
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// `F_t`.
    pub fn idempotent(&self, t: &Tableau) -> &Element {
        let i = self
            .tableaux
            .iter()
            .position(|s| s == t)
            .expect("standard tableau of the right size");
        &self.idempotents[i]
    }

    pub fn f_st(&self, engine: &Engine, s: &Tableau, t: &Tableau) -> Element {
        let left = engine.multiply(self.idempotent(s), &engine.m_st(s, t));
        engine.multiply(&left, self.idempotent(t))
    }

    pub fn g_uv(&self, engine: &Engine, u: &Tableau, v: &Tableau) -> Element {
        let left = engine.multiply(self.idempotent(&u.conjugate()), &engine.n_st(u, v));
        engine.multiply(&left, self.idempotent(&v.conjugate()))
    }

    pub fn f_basis(&self, engine: &Engine, m: &CellBasis) -> Result<CellBasis, HeckeError> {
        let elements = m
            .index
            .iter()
            .zip(&m.elements)
            .map(|((s, t), x)| {
                let left = engine.multiply(self.idempotent(s), x);
                engine.multiply(&left, self.idempotent(t))
            })
            .collect();
        CellBasis::new(engine, "f", m.index.clone(), elements)
    }

    pub fn g_basis(&self, engine: &Engine, n: &CellBasis) -> Result<CellBasis, HeckeError> {
        let elements = n
            .index
            .iter()
            .zip(&n.elements)
            .map(|((u, v), x)| {
                let left = engine.multiply(self.idempotent(&u.conjugate()), x);
                engine.multiply(&left, self.idempotent(&v.conjugate()))
            })
            .collect();
        CellBasis::new(engine, "g", n.index.clone(), elements)
    }
}
