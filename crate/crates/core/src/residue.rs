use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::node::Node;
use crate::Result;

/// An element of `I = Z/eZ`; a plain integer when `e = 0`.
///
/// Values are always stored reduced, so equality is equality in `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Residue(i64);

impl Residue {
    pub fn value(self) -> i64 {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Quantum characteristic `e` and multicharge `κ`.
///
/// The separation condition `κ_l - κ_{l+1} ≥ n` depends on `n`, so it is
/// reported by [`QuiverParams::is_separated`] rather than enforced here.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverParams {
    e: u32,
    multicharge: Vec<i64>,
}

impl QuiverParams {
    pub fn new(e: u32, multicharge: Vec<i64>) -> Result<Self> {
        if e == 1 {
            return Err(Error::InvalidQuantumCharacteristic(e));
        }
        if multicharge.is_empty() {
            return Err(Error::EmptyMulticharge);
        }
        Ok(QuiverParams { e, multicharge })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn level(&self) -> usize {
        self.multicharge.len()
    }

    pub fn multicharge(&self) -> &[i64] {
        &self.multicharge
    }

    pub fn residue(&self, x: i64) -> Residue {
        if self.e == 0 {
            Residue(x)
        } else {
            Residue(x.rem_euclid(self.e as i64))
        }
    }

    /// `c - r + κ_l` reduced into `I`.
    pub fn node_residue(&self, node: Node) -> Residue {
        self.residue(node.diagonal() + self.multicharge[node.comp - 1])
    }

    /// `κ_l - κ_{l+1} ≥ n` for all `l`; vacuous when `e = 0`.
    pub fn is_separated(&self, n: usize) -> bool {
        self.e == 0 || self.multicharge.windows(2).all(|w| w[0] - w[1] >= n as i64)
    }

    /// `(Λ_κ, α_i)`: the number of charges congruent to `i`.
    pub fn lambda_pairing(&self, i: Residue) -> i64 {
        self.multicharge
            .iter()
            .filter(|&&k| self.residue(k) == i)
            .count() as i64
    }

    /// Cartan matrix entry `a_{ij}` of the quiver `Γ_e`.
    pub fn cartan(&self, i: Residue, j: Residue) -> i64 {
        if i == j {
            return 2;
        }
        match self.e {
            0 => {
                if (i.0 - j.0).abs() == 1 {
                    -1
                } else {
                    0
                }
            }
            // Both arrows 0 -> 1 and 1 -> 0 join the two vertices.
            2 => -2,
            e => {
                let d = (i.0 - j.0).rem_euclid(e as i64);
                if d == 1 || d == e as i64 - 1 {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_e_one_and_empty_charge() {
        assert_eq!(
            QuiverParams::new(1, vec![0]),
            Err(Error::InvalidQuantumCharacteristic(1))
        );
        assert_eq!(QuiverParams::new(2, vec![]), Err(Error::EmptyMulticharge));
    }

    #[test]
    fn residues_reduce_only_when_e_positive() {
        let p = QuiverParams::new(3, vec![0]).unwrap();
        assert_eq!(p.residue(-1).value(), 2);
        assert_eq!(p.residue(7).value(), 1);
        let p0 = QuiverParams::new(0, vec![0]).unwrap();
        assert_eq!(p0.residue(-4).value(), -4);
    }

    #[test]
    fn cartan_matrices() {
        let p2 = QuiverParams::new(2, vec![0]).unwrap();
        let (a, b) = (p2.residue(0), p2.residue(1));
        assert_eq!(p2.cartan(a, a), 2);
        assert_eq!(p2.cartan(a, b), -2);

        let p3 = QuiverParams::new(3, vec![0]).unwrap();
        assert_eq!(p3.cartan(p3.residue(0), p3.residue(2)), -1);
        let p4 = QuiverParams::new(4, vec![0]).unwrap();
        assert_eq!(p4.cartan(p4.residue(0), p4.residue(2)), 0);
        let p0 = QuiverParams::new(0, vec![0]).unwrap();
        assert_eq!(p0.cartan(p0.residue(5), p0.residue(4)), -1);
        assert_eq!(p0.cartan(p0.residue(5), p0.residue(3)), 0);
    }

    #[test]
    fn separation_and_pairing() {
        let p = QuiverParams::new(2, vec![3, 0]).unwrap();
        assert!(p.is_separated(3));
        assert!(!p.is_separated(4));
        assert_eq!(p.lambda_pairing(p.residue(0)), 1);
        assert_eq!(p.lambda_pairing(p.residue(1)), 1);
        let q = QuiverParams::new(2, vec![0, 0]).unwrap();
        assert_eq!(q.lambda_pairing(q.residue(0)), 2);
    }
}
