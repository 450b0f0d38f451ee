use std::collections::BTreeMap;

use crate::laurent::LaurentPoly;
use crate::multipartition::Multipartition;
use crate::residue::{QuiverParams, Residue};
use crate::tableau::{enumerate_std, Tableau};

/// `β = Σ β_i α_i`, stored as residue multiplicities.
pub type BlockLabel = BTreeMap<Residue, usize>;

/// The residue content of the diagram of `mu`.
pub fn block_of(mu: &Multipartition, params: &QuiverParams) -> BlockLabel {
    block_of_residues(mu.nodes().map(|node| params.node_residue(node)))
}

pub fn block_of_residues(residues: impl IntoIterator<Item = Residue>) -> BlockLabel {
    let mut beta = BlockLabel::new();
    for i in residues {
        *beta.entry(i).or_default() += 1;
    }
    beta
}

/// `(Λ,β) − ½(β,β)`.
pub fn defect(beta: &BlockLabel, params: &QuiverParams) -> i64 {
    let lambda: i64 = beta
        .iter()
        .map(|(&i, &b)| b as i64 * params.lambda_pairing(i) as i64)
        .sum();
    let mut form = 0;
    for (&i, &bi) in beta {
        for (&j, &bj) in beta {
            form += bi as i64 * bj as i64 * params.cartan(i, j);
        }
    }
    assert!(form % 2 == 0, "(β,β) = {form} is odd");
    lambda - form / 2
}

/// `Σ_{t ∈ Std(μ)} q^{deg t}`.
pub fn graded_dim(mu: &Multipartition, params: &QuiverParams) -> LaurentPoly {
    LaurentPoly::from_terms(
        enumerate_std(mu)
            .iter()
            .map(|t: &Tableau| (t.degree(params), 1)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(c: &[&[usize]]) -> Multipartition {
        Multipartition::new(c.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    #[test]
    fn blocks_of_small_shapes() {
        let e2 = QuiverParams::new(2, vec![0]).unwrap();
        let row = block_of(&mp(&[&[2]]), &e2);
        assert_eq!(row, block_of(&mp(&[&[1, 1]]), &e2));
        assert_eq!(row.get(&e2.residue(0)), Some(&1));
        assert_eq!(row.get(&e2.residue(1)), Some(&1));
        assert!(block_of(&Multipartition::empty(1), &e2).is_empty());
    }

    #[test]
    fn defects() {
        let e2 = QuiverParams::new(2, vec![0]).unwrap();
        let a0 = block_of_residues([e2.residue(0)]);
        assert_eq!(defect(&a0, &e2), 0);
        let a01 = block_of_residues([e2.residue(0), e2.residue(1)]);
        assert_eq!(defect(&a01, &e2), 1);
        assert_eq!(defect(&BlockLabel::new(), &e2), 0);
    }

    #[test]
    fn graded_dimensions() {
        let e2 = QuiverParams::new(2, vec![0]).unwrap();
        assert_eq!(graded_dim(&mp(&[&[2]]), &e2), LaurentPoly::monomial(1, 1));
        assert_eq!(graded_dim(&mp(&[&[1, 1]]), &e2), LaurentPoly::one());
        assert_eq!(graded_dim(&mp(&[&[3, 1]]), &e2).eval_at_one(), 3);
    }
}
