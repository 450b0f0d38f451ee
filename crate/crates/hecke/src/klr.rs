//! KLR idempotents `e(i)`, nilpotents `y_r` and block idempotents `e_β`
//! for the degenerate algebra (`ξ = 1`) over `F_p`.
//!
//! `e(i) = Π_k P_{i_k}(L_k)` with `P_c(x) = 1 − (x − c)^N` and
//! `N = (p−1) p^m`, `p^m ≥ dim H`. On the generalized `c`-eigenspace of
//! `L_k` the power vanishes since `N ≥ dim H`; on a `d`-eigenspace with
//! `d ≠ c` Fermat gives `(x − c)^{p−1} = 1 + ν` with `ν` nilpotent, and
//! `(1 + ν)^{p^m} = 1 + ν^{p^m} = 1`. So `P_c(L_k)` is exactly the
//! projection, which a bare exponent of `dim H` would not guarantee.

use std::collections::BTreeMap;

use specht_core::blocks::block_of_residues;
use specht_core::{BlockLabel, QuiverParams, Residue};

use crate::algebra::{Element, Engine};
use crate::error::HeckeError;
use crate::scalar::Field;

#[derive(Debug)]
pub struct KlrIdempotents {
    quiver: QuiverParams,
    /// Every sequence in `I^n`, lexicographic.
    pub sequences: Vec<Vec<Residue>>,
    pub idempotents: Vec<Element>,
    exponent: u64,
}

/// `(p−1) p^m` with `p^m ≥ dim`.
pub fn projection_exponent(p: u64, dim: usize) -> u64 {
    let mut pm = 1u64;
    while pm < dim as u64 {
        pm *= p;
    }
    (p - 1) * pm
}

impl KlrIdempotents {
    pub fn new(engine: &Engine) -> Result<Self, HeckeError> {
        let params = engine.params();
        let Field::Prime(p) = *engine.field() else {
            return Err(HeckeError::WrongMode("prime-field"));
        };
        if !params.is_degenerate() {
            return Err(HeckeError::WrongMode("degenerate (ξ = 1)"));
        }
        let quiver = params.quiver();
        let n = engine.n();
        let exponent = projection_exponent(p, engine.dim());
        let field = engine.field();
        // projections[k-1][c]
        let projections: Vec<Vec<Element>> = (1..=n)
            .map(|k| {
                (0..p)
                    .map(|c| {
                        let base = engine.l_minus(k, &field.from_i64(c as i64));
                        engine.one().sub(&engine.pow(&base, exponent))
                    })
                    .collect()
            })
            .collect();
        let mut sequences: Vec<Vec<Residue>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for s in &sequences {
                for c in 0..p as i64 {
                    let mut s = s.clone();
                    s.push(quiver.residue(c));
                    next.push(s);
                }
            }
            sequences = next;
        }
        let idempotents = sequences
            .iter()
            .map(|seq| {
                seq.iter().enumerate().fold(engine.one(), |acc, (k, r)| {
                    engine.multiply(&acc, &projections[k][r.value() as usize])
                })
            })
            .collect();
        Ok(KlrIdempotents {
            quiver,
            sequences,
            idempotents,
            exponent,
        })
    }

    pub fn quiver(&self) -> &QuiverParams {
        &self.quiver
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// `e(i)`; zero when no standard tableau has residue sequence `i`.
    pub fn e(&self, seq: &[Residue]) -> &Element {
        let i = self
            .sequences
            .iter()
            .position(|s| s == seq)
            .expect("sequence in I^n");
        &self.idempotents[i]
    }

    /// `y_r = Σ_i (L_r − i_r) e(i)`.
    pub fn y(&self, engine: &Engine, r: usize) -> Element {
        let mut out = Element::zero();
        for (seq, e) in self.sequences.iter().zip(&self.idempotents) {
            if e.is_zero() {
                continue;
            }
            let c = engine.field().from_i64(seq[r - 1].value());
            out = out.add(&engine.multiply(&engine.l_minus(r, &c), e));
        }
        out
    }

    /// `e_β = Σ_{i ∈ I^β} e(i)` for every `β` of size `n`, including the
    /// zero ones.
    pub fn block_idempotents(&self) -> BTreeMap<BlockLabel, Element> {
        let mut out: BTreeMap<BlockLabel, Element> = BTreeMap::new();
        for (seq, e) in self.sequences.iter().zip(&self.idempotents) {
            let beta = block_of_residues(seq.iter().copied());
            let slot = out.entry(beta).or_default();
            *slot = slot.add(e);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::HeckeParams;

    fn res(v: &[i64]) -> Vec<Residue> {
        let q = QuiverParams::new(2, vec![0]).unwrap();
        v.iter().map(|&c| q.residue(c)).collect()
    }

    #[test]
    fn exponent_bound() {
        assert_eq!(projection_exponent(2, 48), 64);
        assert_eq!(projection_exponent(3, 48), 162);
        assert_eq!(projection_exponent(2, 1), 1);
    }

    #[test]
    fn rank_one() {
        let e = Engine::new(HeckeParams::prime(2, vec![0], 1).unwrap());
        let k = KlrIdempotents::new(&e).unwrap();
        assert_eq!(k.e(&res(&[0])), &e.one());
        assert!(k.e(&res(&[1])).is_zero());
        assert!(k.y(&e, 1).is_zero());
    }

    #[test]
    fn n2_p2_single_block() {
        let e = Engine::new(HeckeParams::prime(2, vec![0], 2).unwrap());
        let k = KlrIdempotents::new(&e).unwrap();
        assert!(!k.e(&res(&[0, 1])).is_zero());
        assert!(k.e(&res(&[0, 0])).is_zero());
        assert!(k.e(&res(&[1, 0])).is_zero());
        let blocks = k.block_idempotents();
        let nonzero: Vec<_> = blocks.iter().filter(|(_, e)| !e.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].1, &e.one());
        let y = k.y(&e, 2);
        assert!(e.pow(&y, e.dim() as u64).is_zero());
    }

    #[test]
    fn refuses_rational_params() {
        let e = Engine::new(HeckeParams::semisimple(1, 1));
        assert!(KlrIdempotents::new(&e).is_err());
    }
}
