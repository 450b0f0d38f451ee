use std::fmt;

use serde::{Deserialize, Serialize};

/// A box `(row, col, comp)` of a multipartition diagram, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// `self` lies strictly below `other`: a later component, or the same
    /// component and a lower row.
    pub fn is_below(&self, other: &Node) -> bool {
        self.comp > other.comp || (self.comp == other.comp && self.row > other.row)
    }

    pub fn is_above(&self, other: &Node) -> bool {
        other.is_below(self)
    }

    /// Content `c - r`, before the multicharge offset.
    pub fn diagonal(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Sort key for the top-to-bottom order of the "below" relation.
    pub(crate) fn height_key(&self) -> (usize, usize) {
        (self.comp, self.row)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn below_is_strict_and_ignores_columns() {
        let a = Node::new(2, 1, 1);
        let b = Node::new(1, 5, 1);
        let c = Node::new(1, 1, 2);
        assert!(a.is_below(&b));
        assert!(c.is_below(&a));
        assert!(!b.is_below(&b));
        assert!(!Node::new(1, 2, 1).is_below(&Node::new(1, 1, 1)));
        assert!(b.is_above(&a));
    }
}
