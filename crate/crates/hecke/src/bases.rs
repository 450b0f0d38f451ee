//! Murphy bases `{m_st}`, `{n_st}` and the seminormal bases built from them.

use specht_core::symmetric::tableau_permutation;
use specht_core::tableau::enumerate_std;
use specht_core::{enumerate_multipartitions, Multipartition, Permutation, Tableau};

use crate::algebra::{Element, Engine};
use crate::error::HeckeError;
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// `SStd(P_n)` in a fixed order: shapes as enumerated by the core crate,
/// then `s`, then `t`.
pub fn sstd_index(n: usize, level: usize) -> Vec<(Tableau, Tableau)> {
    let mut out = Vec::new();
    for mu in enumerate_multipartitions(n, level) {
        let std = enumerate_std(&mu);
        for s in &std {
            for t in &std {
                out.push((s.clone(), t.clone()));
            }
        }
    }
    out
}

/// All standard tableaux of size `n`, shapes in enumeration order.
pub fn all_standard(n: usize, level: usize) -> Vec<Tableau> {
    enumerate_multipartitions(n, level)
        .iter()
        .flat_map(enumerate_std)
        .collect()
}

/// The row stabilizer `S_λ` of `t^λ`, for a multicomposition `λ`.
pub fn young_subgroup(lam: &Multipartition) -> Vec<Permutation> {
    let n = lam.size();
    let mut row_of = vec![0usize; n + 1];
    let mut k = 0;
    let mut row = 0;
    for comp in lam.components() {
        for &len in comp {
            for _ in 0..len {
                k += 1;
                row_of[k] = row;
            }
            row += 1;
        }
    }
    Permutation::all(n)
        .into_iter()
        .filter(|w| (1..=n).all(|i| row_of[w.apply(i)] == row_of[i]))
        .collect()
}

impl Engine {
    /// `Π (L_m − c)` over the given `(m, c)`; the factors commute.
    pub fn l_product<'a>(&self, factors: impl IntoIterator<Item = (usize, &'a Scalar)>) -> Element {
        factors.into_iter().fold(self.one(), |acc, (m, c)| {
            self.left_l(m, &acc).sub(&acc.scale(c))
        })
    }

    /// `x_λ = Σ_{w ∈ S_λ} T_w`.
    pub fn x_lambda(&self, lam: &Multipartition) -> Element {
        let mut out = Element::zero();
        for w in young_subgroup(lam) {
            out = out.add(&self.t_perm(&w));
        }
        out
    }

    /// `y_λ = Σ_{w ∈ S_λ} (−ξ)^{−ℓ(w)} T_w`.
    pub fn y_lambda(&self, lam: &Multipartition) -> Element {
        let neg_xi_inv = (-self.params().xi()).inv();
        let mut out = Element::zero();
        for w in young_subgroup(lam) {
            out.add_scaled(&self.t_perm(&w), &neg_xi_inv.pow(w.length() as i64));
        }
        out
    }

    /// `u⁺_λ = Π_{k=2}^{ℓ} Π_{m ≤ |λ^(1)|+…+|λ^(k−1)|} (L_m − Q_k)`.
    pub fn u_plus(&self, lam: &Multipartition) -> Element {
        let q = self.params().q();
        let mut factors = Vec::new();
        let mut upto = 0;
        for k in 2..=lam.level() {
            upto += lam.component_size(k - 1);
            factors.extend((1..=upto).map(|m| (m, &q[k - 1])));
        }
        self.l_product(factors)
    }

    /// `u⁻_λ = Π_{k=1}^{ℓ−1} Π_{m ≤ |λ^(1)|+…+|λ^(ℓ−k)|} (L_m − Q_k)`.
    ///
    /// The nodes of the `j`-th component land in component `ℓ+1−j` of the
    /// conjugate, so they have to avoid `Q_1, …, Q_{ℓ−j}`.
    pub fn u_minus(&self, lam: &Multipartition) -> Element {
        let q = self.params().q();
        let level = lam.level();
        let mut factors = Vec::new();
        for k in 1..level {
            let upto: usize = (1..=level - k).map(|j| lam.component_size(j)).sum();
            factors.extend((1..=upto).map(|m| (m, &q[k - 1])));
        }
        self.l_product(factors)
    }

    pub fn m_lambda(&self, lam: &Multipartition) -> Element {
        self.multiply(&self.u_plus(lam), &self.x_lambda(lam))
    }

    pub fn n_lambda(&self, lam: &Multipartition) -> Element {
        self.multiply(&self.u_minus(lam), &self.y_lambda(lam))
    }

    /// `T*_{d(s)} x T_{d(t)}`.
    pub fn sandwich(&self, s: &Tableau, x: &Element, t: &Tableau) -> Element {
        assert_eq!(s.shape(), t.shape(), "tableaux of different shapes");
        let right = self.right_t_perm(x, &tableau_permutation(t));
        self.left_t_perm(&tableau_permutation(s).inverse(), &right)
    }

    pub fn m_st(&self, s: &Tableau, t: &Tableau) -> Element {
        self.sandwich(s, &self.m_lambda(s.shape()), t)
    }

    pub fn n_st(&self, s: &Tableau, t: &Tableau) -> Element {
        self.sandwich(s, &self.n_lambda(s.shape()), t)
    }
}

/// A basis of `H` indexed by `SStd(P_n)` with the inverse of its
/// coordinate matrix.
#[derive(Clone, Debug)]
pub struct CellBasis {
    pub name: &'static str,
    pub index: Vec<(Tableau, Tableau)>,
    pub elements: Vec<Element>,
    /// Rows are the normal-word coordinates of the basis elements.
    pub matrix: Matrix,
    inverse: Matrix,
}

impl CellBasis {
    pub fn new(
        engine: &Engine,
        name: &'static str,
        index: Vec<(Tableau, Tableau)>,
        elements: Vec<Element>,
    ) -> Result<Self, HeckeError> {
        assert_eq!(index.len(), elements.len());
        let matrix: Matrix = elements.iter().map(|x| engine.to_vector(x)).collect();
        if matrix.len() != engine.dim() {
            return Err(HeckeError::NotABasis {
                name,
                rank: linalg::rank(&matrix),
                dim: engine.dim(),
            });
        }
        let inverse = linalg::inverse(engine.field(), &matrix).ok_or_else(|| {
            HeckeError::NotABasis {
                name,
                rank: linalg::rank(&matrix),
                dim: engine.dim(),
            }
        })?;
        Ok(CellBasis {
            name,
            index,
            elements,
            matrix,
            inverse,
        })
    }

    pub fn murphy_m(engine: &Engine) -> Result<Self, HeckeError> {
        let index = sstd_index(engine.n(), engine.level());
        let elements = index.iter().map(|(s, t)| engine.m_st(s, t)).collect();
        Self::new(engine, "m", index, elements)
    }

    pub fn murphy_n(engine: &Engine) -> Result<Self, HeckeError> {
        let index = sstd_index(engine.n(), engine.level());
        let elements = index.iter().map(|(s, t)| engine.n_st(s, t)).collect();
        Self::new(engine, "n", index, elements)
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn position(&self, s: &Tableau, t: &Tableau) -> Option<usize> {
        self.index.iter().position(|(a, b)| a == s && b == t)
    }

    /// Coordinates of `x` in this basis.
    pub fn coordinates(&self, engine: &Engine, x: &Element) -> Vec<Scalar> {
        linalg::vec_mul(engine.field(), &engine.to_vector(x), &self.inverse)
    }

    pub fn from_coordinates(&self, engine: &Engine, c: &[Scalar]) -> Element {
        engine.from_vector(&linalg::vec_mul(engine.field(), c, &self.matrix))
    }
}
