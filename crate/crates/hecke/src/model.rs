//! The seminormal matrix model: right action of `T_i` and `L_k` on
//! `⊕_λ span Std(λ)` written down directly from the seminormal
//! coefficients, with no use of the rewriting engine.

use specht_core::tableau::enumerate_std;
use specht_core::{enumerate_multipartitions, Multipartition, Permutation, Tableau};

use crate::error::HeckeError;
use crate::linalg::{self, Matrix};
use crate::params::HeckeParams;
use crate::scalar::Scalar;

/// One irreducible block of the model.
#[derive(Debug, Clone)]
pub struct ModelBlock {
    pub shape: Multipartition,
    pub basis: Vec<Tableau>,
    /// `t[r-1]` is the matrix of `T_r`, rows acting on the left.
    pub t: Vec<Matrix>,
    /// `l[k-1]` is the diagonal matrix of `L_k`.
    pub l: Vec<Matrix>,
}

#[derive(Debug, Clone)]
pub struct SeminormalModel {
    params: HeckeParams,
    pub blocks: Vec<ModelBlock>,
}

fn swap_entries(t: &Tableau, i: usize) -> Tableau {
    t.permute(&Permutation::simple(t.size(), i))
}

impl SeminormalModel {
    /// Needs `ξ ≠ 1` and contents separating standard tableaux.
    pub fn new(params: &HeckeParams) -> Result<Self, HeckeError> {
        if params.is_degenerate() {
            return Err(HeckeError::WrongMode("non-degenerate (ξ ≠ 1)"));
        }
        params.check_semisimple()?;
        let n = params.n();
        let field = params.field();
        let xi = params.xi();
        let one = field.one();
        let blocks = enumerate_multipartitions(n, params.level())
            .into_iter()
            .map(|shape| {
                let basis = enumerate_std(&shape);
                let d = basis.len();
                let pos = |t: &Tableau| basis.iter().position(|s| s == t).expect("standard");
                let t = (1..n)
                    .map(|i| {
                        let mut m = vec![vec![field.zero(); d]; d];
                        for (a, v) in basis.iter().enumerate() {
                            let (p, q) = (v.position(i), v.position(i + 1));
                            if p.comp == q.comp && p.row == q.row {
                                m[a][a] = xi.clone();
                            } else if p.comp == q.comp && p.col == q.col {
                                m[a][a] = -&one;
                            } else {
                                let w = swap_entries(v, i);
                                let b = pos(&w);
                                let (cv, ct) = (params.content(v, i), params.content(v, i + 1));
                                if v.dominates(&w) {
                                    // v ⊳ v(i,i+1)
                                    m[a][a] = &(&(xi - &one) * &ct) * &(&ct - &cv).inv();
                                    m[a][b] = one.clone();
                                } else {
                                    // v is the lower one: roles of c_v and c_t swap
                                    let (cv, ct) = (ct, cv);
                                    let num = &(&(xi * &cv) - &ct) * &(&cv - &(xi * &ct));
                                    let den = &(&cv - &ct) * &(&cv - &ct);
                                    m[a][b] = &num * &den.inv();
                                    m[a][a] = &(&(xi - &one) * &cv) * &(&cv - &ct).inv();
                                }
                            }
                        }
                        m
                    })
                    .collect();
                let l = (1..=n)
                    .map(|k| {
                        let mut m = vec![vec![field.zero(); d]; d];
                        for (a, v) in basis.iter().enumerate() {
                            m[a][a] = params.content(v, k);
                        }
                        m
                    })
                    .collect();
                ModelBlock {
                    shape,
                    basis,
                    t,
                    l,
                }
            })
            .collect();
        Ok(SeminormalModel {
            params: params.clone(),
            blocks,
        })
    }

    pub fn params(&self) -> &HeckeParams {
        &self.params
    }

    /// `T_w = T_{r_1} … T_{r_k}` in one block.
    pub fn t_perm(&self, block: &ModelBlock, w: &Permutation) -> Matrix {
        let field = self.params.field();
        w.reduced_expression()
            .into_iter()
            .fold(linalg::identity(field, block.basis.len()), |acc, r| {
                linalg::mat_mul(field, &acc, &block.t[r - 1])
            })
    }

    /// `Σ_λ |Std(λ)| tr_λ(T_w)`, the trace on the regular representation.
    pub fn regular_trace(&self, w: &Permutation) -> Scalar {
        let field = self.params.field();
        self.blocks.iter().fold(field.zero(), |acc, b| {
            let tr = linalg::trace(field, &self.t_perm(b, w));
            &acc + &(&tr * &field.from_i64(b.basis.len() as i64))
        })
    }

    /// Checks every defining relation in every block; returns descriptions
    /// of the failures.
    pub fn relation_failures(&self) -> (u64, Vec<String>) {
        let p = &self.params;
        let field = p.field();
        let n = p.n();
        let xi = p.xi();
        let one = field.one();
        let mut checked = 0;
        let mut failures = Vec::new();
        let mut check = |ok: bool, what: String| {
            checked += 1;
            if !ok {
                failures.push(what);
            }
        };
        for b in &self.blocks {
            let d = b.basis.len();
            let id = linalg::identity(field, d);
            let shift = |m: &Matrix, c: &Scalar| linalg::mat_add(m, &linalg::mat_scale(&id, &-c));
            let mul = |x: &Matrix, y: &Matrix| linalg::mat_mul(field, x, y);
            let sh = &b.shape;
            let cyc = p.q().iter().fold(id.clone(), |acc, q| mul(&acc, &shift(&b.l[0], q)));
            check(linalg::is_zero(&cyc), format!("{sh}: cyclotomic relation"));
            for r in 1..n {
                let t = &b.t[r - 1];
                let quad = mul(&shift(t, &-&one), &shift(t, xi));
                check(linalg::is_zero(&quad), format!("{sh}: quadratic relation at T_{r}"));
                let lhs = mul(t, &b.l[r - 1]);
                let rhs = mul(&b.l[r], &shift(t, &(xi - &one)));
                check(lhs == rhs, format!("{sh}: T_{r} L_{r} = L_{} (T_{r} − ξ + 1)", r + 1));
                for k in 1..=n {
                    if k != r && k != r + 1 {
                        check(
                            mul(t, &b.l[k - 1]) == mul(&b.l[k - 1], t),
                            format!("{sh}: T_{r} L_{k} commute"),
                        );
                    }
                }
                for s in r + 1..n {
                    let u = &b.t[s - 1];
                    if s == r + 1 {
                        check(
                            mul(&mul(t, u), t) == mul(&mul(u, t), u),
                            format!("{sh}: braid relation T_{r} T_{s}"),
                        );
                    } else {
                        check(mul(t, u) == mul(u, t), format!("{sh}: T_{r} T_{s} commute"));
                    }
                }
            }
            for j in 1..=n {
                for k in j + 1..=n {
                    check(
                        mul(&b.l[j - 1], &b.l[k - 1]) == mul(&b.l[k - 1], &b.l[j - 1]),
                        format!("{sh}: L_{j} L_{k} commute"),
                    );
                }
            }
        }
        (checked, failures)
    }
}
