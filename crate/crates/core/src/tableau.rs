use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::multipartition::{dominates_rows, Multipartition};
use crate::node::Node;
use crate::residue::{QuiverParams, Residue};
use crate::symmetric::Permutation;
use crate::Result;

/// A (row standard) tableau: entries `1..=n` placed in the diagram of a
/// multicomposition. Serialized as nested lists `components → rows → entries`.
///
/// [`Tableau::new`] requires standardness. [`Tableau::row_standard`] and
/// deserialization only require increasing rows; use
/// [`Tableau::is_standard`] to check the rest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Vec<usize>>>", into = "Vec<Vec<Vec<usize>>>")]
pub struct Tableau {
    rows: Vec<Vec<Vec<usize>>>,
    shape: Multipartition,
    positions: Vec<Node>,
}

pub type ResidueSequence = Vec<Residue>;

impl Tableau {
    pub fn new(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let t = Self::row_standard(rows)?;
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!("{t} is not standard")));
        }
        Ok(t)
    }

    pub fn row_standard(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let shape = Multipartition::from_composition(
            rows.iter()
                .map(|comp| comp.iter().map(Vec::len).collect())
                .collect(),
        )
        .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let n = shape.size();
        let mut positions = vec![None; n];
        for (l, comp) in rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                if row.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidTableau(format!(
                        "row {} of component {} is not increasing",
                        r + 1,
                        l + 1
                    )));
                }
                for (c, &k) in row.iter().enumerate() {
                    if k == 0 || k > n || positions[k - 1].is_some() {
                        return Err(Error::InvalidTableau(format!(
                            "entries must be 1..={n} each exactly once"
                        )));
                    }
                    positions[k - 1] = Some(Node::new(r + 1, c + 1, l + 1));
                }
            }
        }
        Ok(Tableau {
            rows,
            shape,
            positions: positions.into_iter().map(Option::unwrap).collect(),
        })
    }

    fn from_positions(shape: &Multipartition, positions: Vec<Node>) -> Self {
        let mut rows: Vec<Vec<Vec<usize>>> = shape
            .components()
            .iter()
            .map(|comp| comp.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for (k, node) in positions.iter().enumerate() {
            rows[node.comp - 1][node.row - 1][node.col - 1] = k + 1;
        }
        Tableau {
            rows,
            shape: shape.clone(),
            positions,
        }
    }

    /// `t^μ`: entries left to right along rows, components in order.
    pub fn initial(mu: &Multipartition) -> Self {
        Self::from_positions(mu, mu.nodes().collect())
    }

    /// `t_μ`: entries down the columns, components from last to first.
    /// Equal to the conjugate of `t^{μ'}`.
    pub fn final_tableau(mu: &Multipartition) -> Self {
        Self::initial(&mu.conjugate()).conjugate()
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    pub fn level(&self) -> usize {
        self.shape.level()
    }

    pub fn position(&self, k: usize) -> Node {
        self.positions[k - 1]
    }

    pub fn entry(&self, node: Node) -> Option<usize> {
        self.rows
            .get(node.comp.checked_sub(1)?)?
            .get(node.row.checked_sub(1)?)?
            .get(node.col.checked_sub(1)?)
            .copied()
    }

    /// `comp_t(k)`.
    pub fn comp(&self, k: usize) -> usize {
        self.positions[k - 1].comp
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows
            .iter()
            .flatten()
            .all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        self.shape.is_multipartition()
            && self.is_row_standard()
            && self.positions.iter().all(|p| {
                p.row == 1
                    || self.rows[p.comp - 1][p.row - 2][p.col - 1]
                        < self.rows[p.comp - 1][p.row - 1][p.col - 1]
            })
    }

    /// Row lengths of `t_m`, keeping the row structure of the full shape.
    pub fn shape_at(&self, m: usize) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|row| row.iter().filter(|&&k| k <= m).count())
                    .collect()
            })
            .collect()
    }

    /// `Shape(t_m)` for a standard tableau.
    pub fn restricted_shape(&self, m: usize) -> Multipartition {
        let components = self
            .shape_at(m)
            .into_iter()
            .map(|mut comp| {
                while comp.last() == Some(&0) {
                    comp.pop();
                }
                comp
            })
            .collect();
        Multipartition::new(components).expect("restriction of a standard tableau")
    }

    /// `t_m`.
    pub fn restrict(&self, m: usize) -> Tableau {
        let shape = self.restricted_shape(m);
        Self::from_positions(&shape, self.positions[..m].to_vec())
    }

    /// Transposes each component and reverses their order.
    ///
    /// # Panics
    ///
    /// If the shape is not a multipartition.
    pub fn conjugate(&self) -> Tableau {
        assert!(
            self.shape.is_multipartition(),
            "conjugate of a non-partition shape"
        );
        let level = self.level();
        let positions = self
            .positions
            .iter()
            .map(|p| Node::new(p.col, p.row, level + 1 - p.comp))
            .collect();
        Self::from_positions(&self.shape.conjugate(), positions)
    }

    /// `t·w`: entry `k` becomes `w(k)`.
    pub fn permute(&self, w: &Permutation) -> Tableau {
        assert_eq!(w.degree(), self.size(), "permutation degree");
        let mut positions = self.positions.clone();
        for (k, &node) in self.positions.iter().enumerate() {
            positions[w.apply(k + 1) - 1] = node;
        }
        Self::from_positions(&self.shape, positions)
    }

    /// `s ⊵ t`: `Shape(s_m) ⊵ Shape(t_m)` for every `m`.
    pub fn dominates(&self, t: &Tableau) -> bool {
        assert_eq!(self.size(), t.size(), "dominance across sizes");
        assert_eq!(self.level(), t.level(), "dominance across levels");
        (1..=self.size()).all(|m| dominates_rows(&self.shape_at(m), &t.shape_at(m)))
    }

    pub fn residue_sequence(&self, params: &QuiverParams) -> ResidueSequence {
        self.positions
            .iter()
            .map(|&p| params.node_residue(p))
            .collect()
    }

    /// `deg t = Σ_k d_{A_k}(Shape(t_{k-1}))`, `A_k` the node holding `k`.
    pub fn degree(&self, params: &QuiverParams) -> i64 {
        self.statistic(params, Multipartition::d_below)
    }

    /// `codeg t = Σ_k d^{A_k}(Shape(t_{k-1}))`.
    pub fn codegree(&self, params: &QuiverParams) -> i64 {
        self.statistic(params, Multipartition::d_above)
    }

    fn statistic(
        &self,
        params: &QuiverParams,
        d: fn(&Multipartition, Node, &QuiverParams) -> Result<i64>,
    ) -> i64 {
        assert!(self.is_standard(), "degree of a non-standard tableau");
        assert_eq!(self.level(), params.level(), "tableau level vs multicharge");
        let mut nu = Multipartition::empty(self.level());
        let mut total = 0;
        for &node in &self.positions {
            total += d(&nu, node, params).expect("next node is addable");
            nu = nu.with_node(node);
        }
        total
    }
}

/// `Std(μ)` by last-letter recursion. The node holding `n` is chosen among
/// the removable nodes from the bottom up, so `t^μ` comes first and `t_μ`
/// last.
pub fn enumerate_std(mu: &Multipartition) -> Vec<Tableau> {
    fn go(mu: &Multipartition, suffix: &mut Vec<Node>, out: &mut Vec<Vec<Node>>) {
        if mu.size() == 0 {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for node in mu.removable_nodes().into_iter().rev() {
            suffix.push(node);
            go(&mu.without_node(node), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    go(mu, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|positions| Tableau::from_positions(mu, positions))
        .collect()
}

/// `(s,t) ⧐ (u,v)`: `s ⊵ u` and `t ⊵ v`.
pub fn strong_dominates(first: (&Tableau, &Tableau), second: (&Tableau, &Tableau)) -> bool {
    first.0.dominates(second.0) && first.1.dominates(second.1)
}

/// `(s,t) ⊵ (u,v)`: the shape of `s` strictly dominates that of `u`, or
/// the shapes agree and `s ⊵ u`, `t ⊵ v`.
pub fn pair_dominates(first: (&Tableau, &Tableau), second: (&Tableau, &Tableau)) -> bool {
    let (lam, mu) = (first.0.shape(), second.0.shape());
    lam.strictly_dominates(mu) || (lam == mu && strong_dominates(first, second))
}

/// `comp_s(k) ≤ comp_t(k)` for all `k`.
pub fn comp_leq(s: &Tableau, t: &Tableau) -> bool {
    assert_eq!(s.size(), t.size(), "comp comparison across sizes");
    (1..=s.size()).all(|k| s.comp(k) <= t.comp(k))
}

impl TryFrom<Vec<Vec<Vec<usize>>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        Tableau::row_standard(rows)
    }
}

impl From<Tableau> for Vec<Vec<Vec<usize>>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (l, comp) in self.rows.iter().enumerate() {
            if l > 0 {
                write!(f, "|")?;
            }
            if comp.is_empty() {
                write!(f, "-")?;
            }
            for (r, row) in comp.iter().enumerate() {
                if r > 0 {
                    write!(f, "/")?;
                }
                let entries: Vec<String> = row.iter().map(usize::to_string).collect();
                write!(f, "{}", entries.join(","))?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::enumerate_multipartitions;

    fn mp(c: &[&[usize]]) -> Multipartition {
        Multipartition::new(c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn initial_and_final() {
        let mu = mp(&[&[2], &[]]);
        let t = Tableau::initial(&mu);
        assert_eq!(t.rows(), &[vec![vec![1, 2]], vec![]]);
        assert_eq!(Tableau::final_tableau(&mu), t);

        let mu = mp(&[&[1], &[1]]);
        assert_eq!(Tableau::initial(&mu).comp(1), 1);
        assert_eq!(Tableau::final_tableau(&mu).comp(1), 2);

        let mu = mp(&[&[2, 1]]);
        assert_eq!(
            Tableau::final_tableau(&mu).rows(),
            &[vec![vec![1, 3], vec![2]]]
        );
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(enumerate_std(&mp(&[&[1], &[1]])).len(), 2);
        assert_eq!(enumerate_std(&mp(&[&[4], &[]])).len(), 1);
        assert_eq!(enumerate_std(&mp(&[&[3, 2]])).len(), 5);
        for mu in enumerate_multipartitions(4, 2) {
            let all = enumerate_std(&mu);
            assert_eq!(all.first(), Some(&Tableau::initial(&mu)));
            assert_eq!(all.last(), Some(&Tableau::final_tableau(&mu)));
            assert!(all.iter().all(Tableau::is_standard));
        }
        let total: usize = enumerate_multipartitions(2, 2)
            .iter()
            .map(|mu| enumerate_std(mu).len().pow(2))
            .sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn residues_and_degrees() {
        let e2 = QuiverParams::new(2, vec![0]).unwrap();
        let row = Tableau::initial(&mp(&[&[2]]));
        let col = Tableau::initial(&mp(&[&[1, 1]]));
        let res = |t: &Tableau| -> Vec<i64> {
            t.residue_sequence(&e2).iter().map(|r| r.value()).collect()
        };
        assert_eq!(res(&row), vec![0, 1]);
        assert_eq!(res(&col), vec![0, 1]);
        assert_eq!(row.degree(&e2), 1);
        assert_eq!(row.codegree(&e2), 0);
        assert_eq!(col.degree(&e2), 0);

        let e0 = QuiverParams::new(0, vec![0, 5]).unwrap();
        assert_eq!(Tableau::initial(&mp(&[&[3], &[]])).degree(&e0), 0);
    }

    #[test]
    fn rejects_bad_tableaux() {
        assert!(Tableau::new(vec![vec![vec![2, 1]]]).is_err());
        assert!(Tableau::new(vec![vec![vec![1, 1]]]).is_err());
        assert!(Tableau::new(vec![vec![vec![1, 3], vec![2, 0]]]).is_err());
        assert!(Tableau::new(vec![vec![vec![2], vec![1]]]).is_err());
        let rs = Tableau::row_standard(vec![vec![vec![2], vec![1]]]).unwrap();
        assert!(!rs.is_standard());
    }

    #[test]
    fn permute_and_conjugate() {
        let t = Tableau::new(vec![vec![vec![1, 2]], vec![vec![3]]]).unwrap();
        assert_eq!(
            t.conjugate(),
            Tableau::new(vec![vec![vec![3]], vec![vec![1], vec![2]]]).unwrap()
        );
        let w = Permutation::simple(3, 2);
        assert_eq!(
            t.permute(&w),
            Tableau::new(vec![vec![vec![1, 3]], vec![vec![2]]]).unwrap()
        );
    }

    #[test]
    fn comp_does_not_imply_dominance() {
        // oracle: exhaustive search at ℓ=2, n=2
        let all: Vec<Tableau> = enumerate_multipartitions(2, 2)
            .iter()
            .flat_map(enumerate_std)
            .collect();
        let witness = all
            .iter()
            .flat_map(|s| all.iter().map(move |t| (s, t)))
            .find(|(s, t)| comp_leq(s, t) && !s.dominates(t));
        assert!(witness.is_some());
    }

    #[test]
    fn json_round_trip() {
        let t = Tableau::new(vec![vec![vec![1, 3], vec![2]], vec![]]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "[[[1,3],[2]],[]]");
        assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
    }
}
