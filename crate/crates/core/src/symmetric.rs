//! Permutations of `{1,…,n}` acting on the right.
//!
//! `u * w` applies `u` first, so `(u * w)(i) = w(u(i))` and a tableau
//! satisfies `(t·u)·w = t·(u * w)`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::multipartition::Multipartition;
use crate::tableau::Tableau;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// One-line notation, `images[i-1] = w(i)`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_r = (r, r+1)`.
    pub fn simple(n: usize, r: usize) -> Self {
        assert!(r >= 1 && r < n, "s_{r} does not exist in S_{n}");
        let mut w = Self::identity(n);
        w.images.swap(r - 1, r);
        w
    }

    /// The cycle `a → a+1 → … → b → a`.
    pub fn cycle(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && a <= b && b <= n);
        let mut w = Self::identity(n);
        for i in a..b {
            w.images[i - 1] = i + 1;
        }
        w.images[b - 1] = a;
        w
    }

    /// `s_{r_1} * … * s_{r_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Self::identity(n);
        for &r in word {
            w = w.mul_simple(r);
        }
        w
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self * s_r`.
    pub fn mul_simple(&self, r: usize) -> Self {
        let mut w = self.clone();
        for x in w.images.iter_mut() {
            if *x == r {
                *x = r + 1;
            } else if *x == r + 1 {
                *x = r;
            }
        }
        w
    }

    /// `s_r * self`.
    pub fn simple_mul(&self, r: usize) -> Self {
        let mut w = self.clone();
        w.images.swap(r - 1, r);
        w
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True when `ℓ(s_r * self) < ℓ(self)`.
    pub fn has_left_descent(&self, r: usize) -> bool {
        self.images[r - 1] > self.images[r]
    }

    /// True when `ℓ(self * s_r) < ℓ(self)`.
    pub fn has_right_descent(&self, r: usize) -> bool {
        let inv = self.inverse();
        inv.images[r - 1] > inv.images[r]
    }

    /// The lexicographically smallest reduced word.
    ///
    /// Built greedily: the first letter is the smallest `r` with
    /// `ℓ(s_r * w) < ℓ(w)`, and the rest is the word for `s_r * w`.
    pub fn reduced_expression(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(r) = (1..w.degree()).find(|&r| w.has_left_descent(r)) {
            word.push(r);
            w = w.simple_mul(r);
        }
        word
    }

    /// Bruhat order via the subword property on the canonical reduced word
    /// of `w`.
    ///
    /// # Panics
    ///
    /// If the degrees differ.
    pub fn bruhat_leq(&self, w: &Permutation) -> bool {
        assert_eq!(self.degree(), w.degree(), "Bruhat order across degrees");
        if self.length() > w.length() {
            return false;
        }
        let mut reachable: HashSet<Permutation> = HashSet::new();
        reachable.insert(Permutation::identity(w.degree()));
        for r in w.reduced_expression() {
            let extended: Vec<_> = reachable.iter().map(|x| x.mul_simple(r)).collect();
            reachable.extend(extended);
        }
        reachable.contains(self)
    }

    /// True when every point outside `a..=b` is fixed.
    pub fn is_supported_in(&self, a: usize, b: usize) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| (a..=b).contains(&(i + 1)) || x == i + 1)
    }

    /// All of `S_n`, in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn go(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation {
                    images: current.clone(),
                });
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    current.push(x + 1);
                    go(n, current, used, out);
                    current.pop();
                    used[x] = false;
                }
            }
        }
        go(n, &mut current, &mut used, &mut out);
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, w: &Permutation) -> Permutation {
        assert_eq!(self.degree(), w.degree(), "product across degrees");
        Permutation {
            images: self.images.iter().map(|&x| w.apply(x)).collect(),
        }
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, w: Permutation) -> Permutation {
        &self * &w
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// `d(t)`: the permutation with `t = t^μ · d(t)`, for `t` row standard of
/// shape `μ`.
pub fn tableau_permutation(t: &Tableau) -> Permutation {
    let initial = Tableau::initial(t.shape());
    let images = (1..=t.size())
        .map(|k| t.entry(initial.position(k)).expect("same shape"))
        .collect();
    Permutation { images }
}

/// Finds `w ∈ S_{a..b}` and `a ≤ c < b` such that `s·w` is standard,
/// `ℓ(d(s)w) = ℓ(d(s)) + ℓ(w)`, and `c, c+1` lie in the same row of `t^μ`
/// and the same column of `s·w`.
///
/// The construction descends to the entry directly below `a` and then
/// rotates `c..=b` for the largest `c` sitting above that row with `c+1`
/// below it. When that step fails to produce a standard tableau, the
/// shortest `w` meeting all three conditions is found by search.
pub fn lemma22_witness(
    mu: &Multipartition,
    s: &Tableau,
    a: usize,
    b: usize,
) -> Result<(Permutation, usize)> {
    check_lemma22_pre(mu, s, a, b)?;
    let n = s.size();
    if let Some((w, c)) = lemma22_by_rotation(s, a, b) {
        if lemma22_holds(mu, s, a, b, &w, c) {
            return Ok((w, c));
        }
    }
    for w in permutations_by_length(n, a, b) {
        for c in a..b {
            if lemma22_holds(mu, s, a, b, &w, c) {
                return Ok((w, c));
            }
        }
    }
    Err(Error::Precondition(format!(
        "no witness for a={a}, b={b} in {s}"
    )))
}

fn check_lemma22_pre(mu: &Multipartition, s: &Tableau, a: usize, b: usize) -> Result<()> {
    if !s.is_standard() {
        return Err(Error::Precondition(format!("{s} is not standard")));
    }
    if mu.size() != s.size() || mu.level() != s.shape().level() {
        return Err(Error::SizeMismatch {
            expected: s.size(),
            found: mu.size(),
        });
    }
    if !(1 <= a && a < b && b <= s.size()) {
        return Err(Error::Precondition(format!(
            "need 1 ≤ a < b ≤ n, got a={a}, b={b}"
        )));
    }
    let tmu = Tableau::initial(mu);
    if tmu.position(a).height_key() != tmu.position(b).height_key() {
        return Err(Error::Precondition(format!(
            "{a} and {b} are not in the same row of t^μ"
        )));
    }
    if !same_column(s, a, b) {
        return Err(Error::Precondition(format!(
            "{a} and {b} are not in the same column of {s}"
        )));
    }
    Ok(())
}

fn same_column(t: &Tableau, a: usize, b: usize) -> bool {
    let (x, y) = (t.position(a), t.position(b));
    x.comp == y.comp && x.col == y.col
}

/// The rotation construction alone, without the search fallback. Returns
/// `None` when a rotation step leaves the standard tableaux.
pub fn lemma22_by_rotation(s: &Tableau, a: usize, b: usize) -> Option<(Permutation, usize)> {
    let n = s.size();
    let pa = s.position(a);
    let below = crate::node::Node::new(pa.row + 1, pa.col, pa.comp);
    let b = s.entry(below).filter(|&x| x <= b)?;
    if b == a + 1 {
        return Some((Permutation::identity(n), a));
    }
    let (r, l) = (pa.row, pa.comp);
    let upper = |k: usize| {
        let p = s.position(k);
        p.comp < l || (p.comp == l && p.row <= r)
    };
    let lower = |k: usize| {
        let p = s.position(k);
        p.comp > l || (p.comp == l && p.row > r)
    };
    let c = (a..b).rev().find(|&c| upper(c) && lower(c + 1))?;
    let w = Permutation::cycle(n, c, b);
    let t = s.permute(&w);
    if c == a || !t.is_standard() {
        return None;
    }
    let (rest, c) = lemma22_by_rotation(&t, a, c)?;
    Some((&w * &rest, c))
}

/// Checks the three postconditions of [`lemma22_witness`], plus the support
/// of `w`.
pub fn lemma22_holds(
    mu: &Multipartition,
    s: &Tableau,
    a: usize,
    b: usize,
    w: &Permutation,
    c: usize,
) -> bool {
    if !w.is_supported_in(a, b) || !(a <= c && c < b) {
        return false;
    }
    let t = s.permute(w);
    if !t.is_standard() {
        return false;
    }
    let d = tableau_permutation(s);
    if (&d * w).length() != d.length() + w.length() {
        return false;
    }
    let tmu = Tableau::initial(mu);
    tmu.position(c).height_key() == tmu.position(c + 1).height_key() && same_column(&t, c, c + 1)
}

/// Permutations of `a..=b` (fixing everything else), shortest first.
fn permutations_by_length(n: usize, a: usize, b: usize) -> Vec<Permutation> {
    let k = b - a + 1;
    let mut out: Vec<Permutation> = Permutation::all(k)
        .into_iter()
        .map(|p| {
            let mut images: Vec<usize> = (1..=n).collect();
            for (i, &x) in p.images().iter().enumerate() {
                images[a - 1 + i] = a - 1 + x;
            }
            Permutation { images }
        })
        .collect();
    out.sort_by_key(|w| w.length());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::simple(3, 1).length(), 1);
        assert_eq!(perm(&[3, 2, 1]).length(), 3);
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(3).reduced_expression().is_empty());
        assert_eq!(perm(&[3, 2, 1]).reduced_expression(), vec![1, 2, 1]);
        for w in Permutation::all(4) {
            let word = w.reduced_expression();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word), w);
        }
    }

    #[test]
    fn canonical_word_is_lexicographically_smallest() {
        // oracle: all reduced words by brute force
        fn words(w: &Permutation) -> Vec<Vec<usize>> {
            if w.is_identity() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for r in 1..w.degree() {
                if w.has_left_descent(r) {
                    for mut rest in words(&w.simple_mul(r)) {
                        rest.insert(0, r);
                        out.push(rest);
                    }
                }
            }
            out
        }
        for w in Permutation::all(4) {
            let min = words(&w).into_iter().min().unwrap();
            assert_eq!(w.reduced_expression(), min);
        }
    }

    #[test]
    fn product_convention() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        // apply s1 then s2: 1 → 2 → 3
        assert_eq!((&s1 * &s2).apply(1), 3);
        assert_eq!(Permutation::cycle(4, 2, 4), perm(&[1, 3, 4, 2]));
        assert_eq!(
            Permutation::cycle(4, 2, 4),
            Permutation::from_word(4, &[3, 2])
        );
    }

    #[test]
    fn bruhat_matches_the_rank_matrix_criterion() {
        fn rank_leq(u: &Permutation, w: &Permutation) -> bool {
            let n = u.degree();
            (1..=n).all(|i| {
                (1..=n).all(|k| {
                    let count = |p: &Permutation| (1..=i).filter(|&j| p.apply(j) >= k).count();
                    count(u) <= count(w)
                })
            })
        }
        let all = Permutation::all(4);
        for u in &all {
            for w in &all {
                assert_eq!(u.bruhat_leq(w), rank_leq(u, w), "{u} {w}");
                if u.bruhat_leq(w) {
                    assert!(u.length() <= w.length());
                }
            }
            assert!(Permutation::identity(4).bruhat_leq(u));
        }
    }

    #[test]
    fn tableau_permutations() {
        let mu = Multipartition::new(vec![vec![2, 1]]).unwrap();
        assert!(tableau_permutation(&Tableau::initial(&mu)).is_identity());
        let t = Tableau::new(vec![vec![vec![1, 3], vec![2]]]).unwrap();
        let d = tableau_permutation(&t);
        assert_eq!(Tableau::initial(&mu).permute(&d), t);
        assert_eq!(d, perm(&[1, 3, 2]));
    }

    #[test]
    fn lemma22_trivial_case() {
        let mu = Multipartition::new(vec![vec![2]]).unwrap();
        let s = Tableau::new(vec![vec![vec![1], vec![2]]]).unwrap();
        let (w, c) = lemma22_witness(&mu, &s, 1, 2).unwrap();
        assert!(w.is_identity());
        assert_eq!(c, 1);
    }

    #[test]
    fn lemma22_fallback_case() {
        let mu = Multipartition::new(vec![vec![4]]).unwrap();
        let s = Tableau::new(vec![vec![vec![1, 2], vec![3, 4]]]).unwrap();
        let (w, c) = lemma22_witness(&mu, &s, 2, 4).unwrap();
        assert!(lemma22_holds(&mu, &s, 2, 4, &w, c));
        assert_eq!(w, Permutation::simple(4, 2));
        assert_eq!(c, 3);
    }

    #[test]
    fn lemma22_rejects_bad_input() {
        let mu = Multipartition::new(vec![vec![1, 1]]).unwrap();
        let s = Tableau::new(vec![vec![vec![1], vec![2]]]).unwrap();
        assert!(lemma22_witness(&mu, &s, 1, 2).is_err());
        assert!(lemma22_witness(&mu, &s, 2, 1).is_err());
    }
}
