//! Graded Specht filtrations of induced modules, as shape/shift descriptors.

use serde::{Deserialize, Serialize};

use crate::blocks::{block_of, defect, graded_dim};
use crate::laurent::LaurentPoly;
use crate::multipartition::Multipartition;
use crate::node::Node;
use crate::residue::{QuiverParams, Residue};
use crate::tableau::Tableau;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationLayer {
    pub shape: Multipartition,
    pub shift: i64,
    /// The addable node `A` with `shape = source ∪ {A}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node: Option<Node>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filtration {
    pub source: Multipartition,
    pub residue: Residue,
    pub layers: Vec<FiltrationLayer>,
}

impl Filtration {
    /// `Σ_j q^{shift_j} · dim_q S^{α_j}`.
    pub fn graded_dim(&self, params: &QuiverParams) -> LaurentPoly {
        self.layers
            .iter()
            .map(|layer| graded_dim(&layer.shape, params).shift(layer.shift))
            .sum()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.layers
            .windows(2)
            .all(|w| w[0].shape.strictly_dominates(&w[1].shape))
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.layers
            .windows(2)
            .all(|w| w[1].shape.strictly_dominates(&w[0].shape))
    }
}

/// Layers `(μ ∪ A_j, d_{A_j}(μ))` for the addable `i`-nodes `A_1, A_2, …`
/// taken top to bottom.
///
/// # Panics
///
/// If the layer shapes fail to strictly decrease in dominance.
pub fn induction_filtration(mu: &Multipartition, i: i64, params: &QuiverParams) -> Filtration {
    let f = unchecked_induction(mu, i, params);
    assert!(
        f.is_strictly_decreasing(),
        "layers of {f:?} out of dominance order"
    );
    f
}

pub(crate) fn unchecked_induction(
    mu: &Multipartition,
    i: i64,
    params: &QuiverParams,
) -> Filtration {
    let residue = params.residue(i);
    let layers = mu
        .addable_i_nodes(residue, params)
        .into_iter()
        .map(|a| FiltrationLayer {
            shape: mu.with_node(a),
            shift: mu.d_below(a, params).expect("addable node"),
            node: Some(a),
        })
        .collect();
    Filtration {
        source: mu.clone(),
        residue,
        layers,
    }
}

/// Layers `(ν ∪ A_k, d^{A_k}(ν))` for the addable `i`-nodes of `ν` taken
/// bottom to top, so shapes strictly increase in dominance.
///
/// # Panics
///
/// If the layer shapes fail to strictly increase in dominance.
pub fn dual_induction_filtration(nu: &Multipartition, i: i64, params: &QuiverParams) -> Filtration {
    let residue = params.residue(i);
    let layers = nu
        .addable_i_nodes(residue, params)
        .into_iter()
        .rev()
        .map(|a| FiltrationLayer {
            shape: nu.with_node(a),
            shift: nu.d_above(a, params).expect("addable node"),
            node: Some(a),
        })
        .collect();
    let f = Filtration {
        source: nu.clone(),
        residue,
        layers,
    };
    assert!(
        f.is_strictly_increasing(),
        "layers of {f:?} out of dominance order"
    );
    f
}

pub fn graded_dim_induced(mu: &Multipartition, i: i64, params: &QuiverParams) -> LaurentPoly {
    induction_filtration(mu, i, params).graded_dim(params)
}

/// `t^{α}_μ`: the standard `α`-tableau agreeing with `t_μ` on `1..=n`,
/// with `n+1` at `node`.
pub fn extended_final_tableau(mu: &Multipartition, node: Node) -> Tableau {
    let n = mu.size();
    let tmu = Tableau::final_tableau(mu);
    let alpha = mu.with_node(node);
    let mut rows: Vec<Vec<Vec<usize>>> = tmu.rows().to_vec();
    let comp = &mut rows[node.comp - 1];
    if node.row > comp.len() {
        comp.push(Vec::new());
    }
    comp[node.row - 1].push(n + 1);
    let t = Tableau::new(rows).expect("adding an addable node keeps standardness");
    debug_assert_eq!(t.shape(), &alpha);
    t
}

/// `deg t^{α_j}_μ = deg t_μ + d_{A_j}(μ)` for every layer.
pub fn check_degree_identity(mu: &Multipartition, i: i64, params: &QuiverParams) -> bool {
    let base = Tableau::final_tableau(mu).degree(params);
    induction_filtration(mu, i, params)
        .layers
        .iter()
        .all(|layer| {
            let a = layer.node.expect("layer node");
            extended_final_tableau(mu, a).degree(params) == base + layer.shift
        })
}

/// `2 codeg t_μ + deg t^{α_j}_μ = def β + codeg t_μ + d_{A_j}(μ)` for
/// every layer, with `β` the block of `μ`.
pub fn check_defect_shift_identity(mu: &Multipartition, i: i64, params: &QuiverParams) -> bool {
    let tmu = Tableau::final_tableau(mu);
    let codeg = tmu.codegree(params);
    let def = defect(&block_of(mu, params), params);
    induction_filtration(mu, i, params)
        .layers
        .iter()
        .all(|layer| {
            let a = layer.node.expect("layer node");
            let deg = extended_final_tableau(mu, a).degree(params);
            2 * codeg + deg == def + codeg + mu.d_below(a, params).expect("addable node")
        })
}

/// `dim_q S^λ = Σ_B q^{d_B(λ−B)} dim_q S^{λ−B}` over removable nodes `B`.
pub fn check_restriction_identity(lambda: &Multipartition, params: &QuiverParams) -> bool {
    let total: LaurentPoly = lambda
        .removable_nodes()
        .into_iter()
        .map(|b| {
            let smaller = lambda.without_node(b);
            let shift = smaller.d_below(b, params).expect("addable to λ−B");
            graded_dim(&smaller, params).shift(shift)
        })
        .sum();
    lambda.size() == 0 || total == graded_dim(lambda, params)
}
