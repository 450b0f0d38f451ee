use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::node::Node;
use crate::residue::{QuiverParams, Residue};
use crate::Result;

/// An ℓ-tuple of partitions, stored as row lengths with components
/// outermost.
///
/// [`Multipartition::from_composition`] relaxes the weakly-decreasing
/// condition so the same type also carries multicompositions; use
/// [`Multipartition::is_multipartition`] to tell them apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Multipartition {
    components: Vec<Vec<usize>>,
}

impl Multipartition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        let mu = Self::from_composition(components)?;
        for (l, comp) in mu.components.iter().enumerate() {
            if comp.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotAPartition {
                    component: l + 1,
                    parts: comp.clone(),
                });
            }
        }
        Ok(mu)
    }

    /// A multicomposition: positive parts in any order.
    pub fn from_composition(components: Vec<Vec<usize>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Precondition(
                "a multipartition needs at least one component".into(),
            ));
        }
        for (l, comp) in components.iter().enumerate() {
            if comp.contains(&0) {
                return Err(Error::ZeroPart(l + 1));
            }
        }
        Ok(Multipartition { components })
    }

    pub fn empty(level: usize) -> Self {
        assert!(level > 0, "level must be positive");
        Multipartition {
            components: vec![Vec::new(); level],
        }
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    pub fn component_size(&self, l: usize) -> usize {
        self.components[l - 1].iter().sum()
    }

    pub fn row_len(&self, row: usize, comp: usize) -> usize {
        self.components[comp - 1].get(row - 1).copied().unwrap_or(0)
    }

    pub fn is_multipartition(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] >= w[1]))
    }

    pub fn contains(&self, node: Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && node.row >= 1
            && node.col >= 1
            && node.col <= self.row_len(node.row, node.comp)
    }

    /// All nodes, in row-reading order (components, then rows, then columns).
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components.iter().enumerate().flat_map(|(l, comp)| {
            comp.iter()
                .enumerate()
                .flat_map(move |(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c, l + 1)))
        })
    }

    /// `μ' = (μ^{(ℓ)}', …, μ^{(1)}')`.
    pub fn conjugate(&self) -> Multipartition {
        let components = self
            .components
            .iter()
            .rev()
            .map(|comp| conjugate_partition(comp))
            .collect();
        Multipartition { components }
    }

    /// Prefix sums `Σ_{k<l}|λ^{(k)}| + Σ_{j≤i} λ^{(l)}_j` for `i = 1..rows`.
    pub fn prefix_sums(&self, rows: usize) -> Vec<usize> {
        prefix_sums(&self.components, rows)
    }

    /// The dominance order `⊵`.
    ///
    /// # Panics
    ///
    /// If the two arguments differ in size or level.
    pub fn dominates(&self, other: &Multipartition) -> bool {
        assert_eq!(self.level(), other.level(), "dominance across levels");
        assert_eq!(self.size(), other.size(), "dominance across sizes");
        dominates_rows(&self.components, &other.components)
    }

    pub fn strictly_dominates(&self, other: &Multipartition) -> bool {
        self != other && self.dominates(other)
    }

    pub fn with_node(&self, node: Node) -> Multipartition {
        let mut components = self.components.clone();
        let comp = &mut components[node.comp - 1];
        if node.row > comp.len() {
            comp.resize(node.row, 0);
        }
        comp[node.row - 1] += 1;
        Multipartition { components }
    }

    pub fn without_node(&self, node: Node) -> Multipartition {
        let mut components = self.components.clone();
        let comp = &mut components[node.comp - 1];
        comp[node.row - 1] -= 1;
        while comp.last() == Some(&0) {
            comp.pop();
        }
        Multipartition { components }
    }

    /// Addable nodes ordered top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (l, comp) in self.components.iter().enumerate() {
            for r in 0..=comp.len() {
                let len = comp.get(r).copied().unwrap_or(0);
                if r == 0 || comp[r - 1] > len {
                    out.push(Node::new(r + 1, len + 1, l + 1));
                }
            }
        }
        out
    }

    /// Removable nodes ordered top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (l, comp) in self.components.iter().enumerate() {
            for (r, &len) in comp.iter().enumerate() {
                let next = comp.get(r + 1).copied().unwrap_or(0);
                if len > next {
                    out.push(Node::new(r + 1, len, l + 1));
                }
            }
        }
        out
    }

    pub fn addable_i_nodes(&self, i: Residue, params: &QuiverParams) -> Vec<Node> {
        check_level(self, params);
        self.addable_nodes()
            .into_iter()
            .filter(|&a| params.node_residue(a) == i)
            .collect()
    }

    pub fn removable_i_nodes(&self, i: Residue, params: &QuiverParams) -> Vec<Node> {
        check_level(self, params);
        self.removable_nodes()
            .into_iter()
            .filter(|&a| params.node_residue(a) == i)
            .collect()
    }

    /// `d_A(μ)`: addable minus removable `i`-nodes strictly below `A`,
    /// where `i` is the residue of `A`.
    pub fn d_below(&self, node: Node, params: &QuiverParams) -> Result<i64> {
        self.signed_count(node, params, |x| x.is_below(&node))
    }

    /// `d^A(μ)`: addable minus removable `i`-nodes strictly above `A`.
    pub fn d_above(&self, node: Node, params: &QuiverParams) -> Result<i64> {
        self.signed_count(node, params, |x| x.is_above(&node))
    }

    fn signed_count(
        &self,
        node: Node,
        params: &QuiverParams,
        keep: impl Fn(&Node) -> bool,
    ) -> Result<i64> {
        let addable = self.addable_nodes();
        let removable = self.removable_nodes();
        if !addable.contains(&node) && !removable.contains(&node) {
            return Err(Error::NotAddableOrRemovable(node));
        }
        let i = params.node_residue(node);
        let count = |nodes: &[Node]| {
            nodes
                .iter()
                .filter(|x| params.node_residue(**x) == i)
                .inspect(|x| {
                    assert!(
                        **x == node || x.height_key() != node.height_key(),
                        "two {i}-nodes {x} and {node} share a row"
                    )
                })
                .filter(|x| keep(x))
                .count() as i64
        };
        Ok(count(&addable) - count(&removable))
    }
}

fn check_level(mu: &Multipartition, params: &QuiverParams) {
    assert_eq!(
        mu.level(),
        params.level(),
        "multipartition level does not match the multicharge"
    );
}

pub(crate) fn conjugate_partition(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| parts.iter().filter(|&&p| p >= c).count())
        .collect()
}

pub(crate) fn prefix_sums(components: &[Vec<usize>], rows: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(components.len() * rows);
    let mut before = 0;
    for comp in components {
        let mut acc = before;
        for i in 0..rows {
            acc += comp.get(i).copied().unwrap_or(0);
            out.push(acc);
        }
        before += comp.iter().sum::<usize>();
    }
    out
}

/// Dominance on raw row-length vectors; zero rows are allowed so the shapes
/// of partial row-standard tableaux can be compared.
pub(crate) fn dominates_rows(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let rows = a
        .iter()
        .chain(b.iter())
        .map(Vec::len)
        .max()
        .unwrap_or(0)
        .max(1);
    prefix_sums(a, rows)
        .iter()
        .zip(prefix_sums(b, rows).iter())
        .all(|(x, y)| x >= y)
}

/// Partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` with positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn level_splits(n: usize, level: usize) -> Vec<Vec<usize>> {
    if level == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in level_splits(n - first, level - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn product_of<F>(n: usize, level: usize, parts: F) -> Vec<Multipartition>
where
    F: Fn(usize) -> Vec<Vec<usize>>,
{
    let mut out = Vec::new();
    for split in level_splits(n, level) {
        let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        for &size in &split {
            let options = parts(size);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |p| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(
            acc.into_iter()
                .map(|components| Multipartition { components }),
        );
    }
    out
}

/// All multipartitions of `n` with `level` components, most dominant first.
///
/// The order sorts prefix-sum vectors lexicographically in decreasing
/// order, which is a linear extension of dominance.
pub fn enumerate_multipartitions(n: usize, level: usize) -> Vec<Multipartition> {
    let mut out = product_of(n, level, partitions);
    sort_by_dominance(&mut out, n);
    out
}

/// All multicompositions of `n` with `level` components.
pub fn enumerate_multicompositions(n: usize, level: usize) -> Vec<Multipartition> {
    let mut out = product_of(n, level, compositions);
    sort_by_dominance(&mut out, n);
    out
}

fn sort_by_dominance(shapes: &mut [Multipartition], n: usize) {
    let rows = n.max(1);
    shapes.sort_by(|a, b| b.prefix_sums(rows).cmp(&a.prefix_sums(rows)));
}

impl TryFrom<Vec<Vec<usize>>> for Multipartition {
    type Error = Error;

    fn try_from(components: Vec<Vec<usize>>) -> Result<Self> {
        Multipartition::new(components)
    }
}

impl From<Multipartition> for Vec<Vec<usize>> {
    fn from(mu: Multipartition) -> Self {
        mu.components
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (l, comp) in self.components.iter().enumerate() {
            if l > 0 {
                write!(f, "|")?;
            }
            if comp.is_empty() {
                write!(f, "-")?;
            }
            for (r, part) in comp.iter().enumerate() {
                if r > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{part}")?;
            }
        }
        write!(f, ")")
    }
}
