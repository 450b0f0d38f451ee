//! Normal-form arithmetic in `H_n(ξ, Q)`.
//!
//! Every element is a combination of words `L_1^{a_1}…L_n^{a_n} T_w` with
//! `0 ≤ a_k < ℓ`. Products are computed by letting the generators of the
//! left factor act on the right factor one at a time, so only two rewriting
//! steps are needed:
//!
//! * `T_r · L^a T_v`. Writing `x = L_r`, `y = L_{r+1}` and `s` for the swap
//!   of `x` and `y`, the defining relation gives
//!   `T_r f = (s f) T_r − ((ξ−1) y + δ) ∂f` with `∂f = (f − s f)/(x − y)`.
//!   The exponents of `y ∂f` never reach `ℓ`, so no overflow happens here.
//! * `L_k · L^a T_v`, which only overflows when `a_k = ℓ − 1`. Then
//!   `L_k^ℓ` is replaced by a stored normal form `N_k`. `N_1` comes from the
//!   cyclotomic relation and `N_k` from `L_k = ξ⁻¹ (T_{k−1} L_{k−1} T_{k−1} +
//!   δ T_{k−1})`, which only involves `N_j` for `j < k`. Pushing the rest of
//!   `L^a` back onto `N_k T_v` overflows only at indices below `k`, so the
//!   rewriting terminates by induction on the overflowing index.
//!
//! All single-generator actions on words are tabulated up front.

use std::collections::{BTreeMap, HashMap};

use specht_core::Permutation;

use crate::params::HeckeParams;
use crate::scalar::{Field, Scalar};

/// Index of a normal word in [`Engine::words`].
pub type WordId = usize;

/// `L_1^{a_1}…L_n^{a_n} T_w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub exps: Vec<u8>,
    pub perm: Permutation,
}

/// A linear combination of normal words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<WordId, Scalar>,
}

type Sparse = Vec<(WordId, Scalar)>;

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn terms(&self) -> &BTreeMap<WordId, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: WordId) -> Option<&Scalar> {
        self.terms.get(&w)
    }

    pub fn add_term(&mut self, w: WordId, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (&w, v) in &other.terms {
            self.add_term(w, &(v * c));
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (&w, v) in &other.terms {
            out.add_term(w, v);
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (&w, v) in &other.terms {
            out.add_term(w, &-v);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
        out
    }
}

/// Rewriting tables for one choice of `(n, ℓ, ξ, Q)`. Immutable once built.
#[derive(Debug)]
pub struct Engine {
    params: HeckeParams,
    n: usize,
    level: usize,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, usize>,
    words: Vec<Word>,
    /// `left_t[r-1][w]` is `T_r · w`.
    left_t: Vec<Vec<Sparse>>,
    /// `left_l[k-1][w]` is `L_k · w`.
    left_l: Vec<Vec<Sparse>>,
    /// `right_t[r-1][w]` is `w · T_r`.
    right_t: Vec<Vec<Sparse>>,
}

impl Engine {
    pub fn new(params: HeckeParams) -> Self {
        let n = params.n();
        let level = params.level();
        assert!(level <= u8::MAX as usize, "level too large");
        let perms = Permutation::all(n);
        let perm_index = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut words = Vec::new();
        for code in 0..level.pow(n as u32) {
            let mut exps = vec![0u8; n];
            let mut c = code;
            for e in exps.iter_mut() {
                *e = (c % level) as u8;
                c /= level;
            }
            for p in &perms {
                words.push(Word {
                    exps: exps.clone(),
                    perm: p.clone(),
                });
            }
        }
        let mut engine = Engine {
            params,
            n,
            level,
            perms,
            perm_index,
            words,
            left_t: Vec::new(),
            left_l: Vec::new(),
            right_t: Vec::new(),
        };
        engine.right_t = (1..n).map(|r| engine.build_right_t(r)).collect();
        engine.left_t = (1..n).map(|r| engine.build_left_t(r)).collect();
        for k in 1..=n {
            let table = engine.build_left_l(k);
            engine.left_l.push(table);
        }
        engine
    }

    pub fn params(&self) -> &HeckeParams {
        &self.params
    }

    pub fn field(&self) -> &Field {
        self.params.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// `ℓ^n n!`.
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word_id(&self, exps: &[u8], perm: &Permutation) -> WordId {
        let mut code = 0;
        for &e in exps.iter().rev() {
            debug_assert!((e as usize) < self.level);
            code = code * self.level + e as usize;
        }
        code * self.perms.len() + self.perm_index[perm]
    }

    fn scalar(&self, x: i64) -> Scalar {
        self.field().from_i64(x)
    }

    fn delta(&self) -> Scalar {
        if self.params.is_degenerate() {
            self.scalar(1)
        } else {
            self.scalar(0)
        }
    }

    // ---- elements ------------------------------------------------------

    pub fn one(&self) -> Element {
        self.monomial(&vec![0; self.n], &Permutation::identity(self.n))
    }

    pub fn scalar_element(&self, c: &Scalar) -> Element {
        self.one().scale(c)
    }

    pub fn monomial(&self, exps: &[u8], perm: &Permutation) -> Element {
        let mut e = Element::zero();
        e.add_term(self.word_id(exps, perm), &self.scalar(1));
        e
    }

    /// `T_w`.
    pub fn t_perm(&self, w: &Permutation) -> Element {
        self.monomial(&vec![0; self.n], w)
    }

    /// `T_r`.
    pub fn t(&self, r: usize) -> Element {
        self.t_perm(&Permutation::simple(self.n, r))
    }

    /// `L_k`, reduced if `ℓ = 1`.
    pub fn l(&self, k: usize) -> Element {
        self.left_l(k, &self.one())
    }

    /// `L_k − c`.
    pub fn l_minus(&self, k: usize, c: &Scalar) -> Element {
        self.l(k).sub(&self.scalar_element(c))
    }

    // ---- single generator actions -------------------------------------

    fn apply(&self, table: &[Sparse], x: &Element) -> Element {
        let mut out = Element::zero();
        for (&w, c) in &x.terms {
            for (v, d) in &table[w] {
                out.add_term(*v, &(c * d));
            }
        }
        out
    }

    /// `T_r · x`.
    pub fn left_t(&self, r: usize, x: &Element) -> Element {
        self.apply(&self.left_t[r - 1], x)
    }

    /// `L_k · x`.
    pub fn left_l(&self, k: usize, x: &Element) -> Element {
        self.apply(&self.left_l[k - 1], x)
    }

    /// `x · T_r`.
    pub fn right_t(&self, x: &Element, r: usize) -> Element {
        self.apply(&self.right_t[r - 1], x)
    }

    /// `x · T_w`.
    pub fn right_t_perm(&self, x: &Element, w: &Permutation) -> Element {
        w.reduced_expression()
            .into_iter()
            .fold(x.clone(), |acc, r| self.right_t(&acc, r))
    }

    /// `T_w · x`.
    pub fn left_t_perm(&self, w: &Permutation, x: &Element) -> Element {
        w.reduced_expression()
            .into_iter()
            .rev()
            .fold(x.clone(), |acc, r| self.left_t(r, &acc))
    }

    /// `x · L_k`, through the anti-involution.
    pub fn right_l(&self, x: &Element, k: usize) -> Element {
        self.star(&self.left_l(k, &self.star(x)))
    }

    /// `word(w) · x`.
    fn word_times(&self, w: WordId, x: &Element) -> Element {
        let word = &self.words[w];
        let mut acc = self.left_t_perm(&word.perm, x);
        for (k, &a) in word.exps.iter().enumerate() {
            for _ in 0..a {
                acc = self.left_l(k + 1, &acc);
            }
        }
        acc
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (&w, c) in &a.terms {
            out.add_scaled(&self.word_times(w, b), c);
        }
        out
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a Element>) -> Element {
        factors
            .into_iter()
            .fold(self.one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn pow(&self, a: &Element, mut exp: u64) -> Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `ab − ba`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        self.multiply(a, b).sub(&self.multiply(b, a))
    }

    /// The anti-involution fixing every `T_r` and `L_k`:
    /// `(L^a T_v)^* = T_{v⁻¹} L^a`.
    pub fn star(&self, x: &Element) -> Element {
        let id = Permutation::identity(self.n);
        let mut out = Element::zero();
        for (&w, c) in &x.terms {
            let word = &self.words[w];
            let l = self.monomial(&word.exps, &id);
            out.add_scaled(&self.left_t_perm(&word.perm.inverse(), &l), c);
        }
        out
    }

    // ---- dense views ---------------------------------------------------

    pub fn to_vector(&self, x: &Element) -> Vec<Scalar> {
        let mut v = vec![self.scalar(0); self.dim()];
        for (&w, c) in &x.terms {
            v[w] = c.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[Scalar]) -> Element {
        let mut out = Element::zero();
        for (w, c) in v.iter().enumerate() {
            out.add_term(w, c);
        }
        out
    }

    /// Trace of `x ↦ a x` on the regular representation.
    pub fn regular_trace(&self, a: &Element) -> Scalar {
        let mut tr = self.scalar(0);
        for (&w, c) in &a.terms {
            for v in 0..self.dim() {
                let basis = self.word_element(v);
                if let Some(d) = self.word_times(w, &basis).coefficient(v) {
                    tr = &tr + &(c * d);
                }
            }
        }
        tr
    }

    pub fn word_element(&self, w: WordId) -> Element {
        let mut e = Element::zero();
        e.add_term(w, &self.scalar(1));
        e
    }

    /// Rows are the coordinates of `w_i · y` for every normal word `w_i`,
    /// so that `coords(x y) = coords(x) · left_matrix(y)`.
    pub fn left_matrix(&self, y: &Element) -> Vec<Vec<Scalar>> {
        (0..self.dim())
            .map(|w| self.to_vector(&self.word_times(w, y)))
            .collect()
    }

    // ---- table construction -------------------------------------------

    fn build_right_t(&self, r: usize) -> Vec<Sparse> {
        let xi = self.params.xi().clone();
        let one = self.scalar(1);
        self.words
            .iter()
            .map(|word| {
                let up = word.perm.mul_simple(r);
                let id = self.word_id(&word.exps, &up);
                if up.length() > word.perm.length() {
                    vec![(id, one.clone())]
                } else {
                    let same = self.word_id(&word.exps, &word.perm);
                    vec![(same, &xi - &one), (id, xi.clone())]
                }
            })
            .collect()
    }

    fn build_left_t(&self, r: usize) -> Vec<Sparse> {
        let xi = self.params.xi().clone();
        let one = self.scalar(1);
        let delta = self.delta();
        let xi_minus_one = &xi - &one;
        self.words
            .iter()
            .map(|word| {
                let mut out = Element::zero();
                // T_r T_v
                let up = word.perm.simple_mul(r);
                let mut swapped = word.exps.clone();
                swapped.swap(r - 1, r);
                if up.length() > word.perm.length() {
                    out.add_term(self.word_id(&swapped, &up), &one);
                } else {
                    out.add_term(self.word_id(&swapped, &word.perm), &xi_minus_one);
                    out.add_term(self.word_id(&swapped, &up), &xi);
                }
                // −((ξ−1) y + δ) ∂f, times T_v
                let (a, b) = (word.exps[r - 1] as i64, word.exps[r] as i64);
                if a != b {
                    let (lo, hi, sign) = if a > b { (b, a, -1) } else { (a, b, 1) };
                    for i in 0..hi - lo {
                        let j = hi - lo - 1 - i;
                        let mut e = word.exps.clone();
                        e[r - 1] = (lo + i) as u8;
                        e[r] = (lo + j) as u8;
                        out.add_term(self.word_id(&e, &word.perm), &(&delta * &self.scalar(sign)));
                        e[r] += 1;
                        out.add_term(
                            self.word_id(&e, &word.perm),
                            &(&xi_minus_one * &self.scalar(sign)),
                        );
                    }
                }
                out.terms.into_iter().collect()
            })
            .collect()
    }

    /// Needs `left_t` and `left_l` for indices below `k`.
    fn overflow(&self, k: usize) -> Element {
        let zeros = vec![0u8; self.n];
        let id = Permutation::identity(self.n);
        if k == 1 {
            // x^ℓ = x^ℓ − Π(x − Q_l)
            let mut poly = vec![self.scalar(1)];
            for q in self.params.q() {
                let mut next = vec![self.scalar(0); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] = &next[i + 1] + c;
                    next[i] = &next[i] - &(c * q);
                }
                poly = next;
            }
            let mut out = Element::zero();
            for (j, c) in poly.iter().enumerate().take(self.level) {
                let mut e = zeros.clone();
                e[0] = j as u8;
                out.add_term(self.word_id(&e, &id), &-c);
            }
            return out;
        }
        let mut e = zeros;
        e[k - 1] = (self.level - 1) as u8;
        let p = self.monomial(&e, &id);
        let tp = self.left_t(k - 1, &p);
        let mut n = self.left_t(k - 1, &self.left_l(k - 1, &tp));
        if self.params.is_degenerate() {
            n = n.add(&tp);
        }
        n.scale(&self.params.xi().inv())
    }

    fn build_left_l(&self, k: usize) -> Vec<Sparse> {
        let nk = self.overflow(k);
        let one = self.scalar(1);
        self.words
            .iter()
            .map(|word| {
                let mut exps = word.exps.clone();
                if (exps[k - 1] as usize) + 1 < self.level {
                    exps[k - 1] += 1;
                    return vec![(self.word_id(&exps, &word.perm), one.clone())];
                }
                exps[k - 1] = 0;
                let mut acc = self.right_t_perm(&nk, &word.perm);
                // indices above k do not occur in N_k
                let mut shifted = Element::zero();
                for (&w, c) in &acc.terms {
                    let mut e = self.words[w].exps.clone();
                    for m in k..self.n {
                        debug_assert_eq!(e[m], 0);
                        e[m] = exps[m];
                    }
                    shifted.add_term(self.word_id(&e, &self.words[w].perm), c);
                }
                acc = shifted;
                for m in 1..k {
                    for _ in 0..exps[m - 1] {
                        acc = self.left_l(m, &acc);
                    }
                }
                acc.terms.into_iter().collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn engine(n: usize, level: usize) -> Engine {
        Engine::new(HeckeParams::semisimple(n, level))
    }

    #[test]
    fn quadratic_relation() {
        let e = engine(2, 1);
        let t = e.t(1);
        let xi = e.params().xi().clone();
        let expect = t
            .scale(&(&xi - &e.field().one()))
            .add(&e.scalar_element(&xi));
        assert_eq!(e.multiply(&t, &t), expect);
    }

    #[test]
    fn defining_relations_hold() {
        for (n, level) in [(3, 1), (3, 2), (2, 3)] {
            let e = engine(n, level);
            relations(&e);
        }
        let p = HeckeParams::prime(3, vec![0, 1], 3).unwrap();
        relations(&Engine::new(p));
        let xi = BigRational::new(3.into(), 2.into());
        relations(&Engine::new(HeckeParams::rational(xi, vec![2, -1], 3).unwrap()));
    }

    fn relations(e: &Engine) {
        let n = e.n();
        let one = e.field().one();
        let xi = e.params().xi().clone();
        let delta = e.delta();
        let cyc = e.product(
            &e.params()
                .q()
                .iter()
                .map(|q| e.l_minus(1, q))
                .collect::<Vec<_>>(),
        );
        assert!(cyc.is_zero());
        for r in 1..n {
            let t = e.t(r);
            let quad = e.multiply(
                &t.add(&e.one()),
                &t.sub(&e.scalar_element(&xi)),
            );
            assert!(quad.is_zero());
            let lhs = e.multiply(&t, &e.l(r)).add(&e.scalar_element(&delta));
            let rhs = e.multiply(
                &e.l(r + 1),
                &t.sub(&e.scalar_element(&(&xi - &one))),
            );
            assert_eq!(lhs, rhs, "r={r}");
            for k in 1..=n {
                if k != r && k != r + 1 {
                    assert!(e.commutator(&t, &e.l(k)).is_zero());
                }
            }
            for s in r + 2..n {
                assert!(e.commutator(&t, &e.t(s)).is_zero());
            }
            if r + 1 < n {
                let u = e.t(r + 1);
                assert_eq!(e.product([&t, &u, &t]), e.product([&u, &t, &u]));
            }
        }
        for j in 1..=n {
            for k in 1..=n {
                assert!(e.commutator(&e.l(j), &e.l(k)).is_zero());
            }
        }
    }

    #[test]
    fn star_reverses_words() {
        let e = engine(3, 2);
        let t12 = e.multiply(&e.t(1), &e.t(2));
        assert_eq!(e.star(&t12), e.multiply(&e.t(2), &e.t(1)));
        assert_eq!(e.star(&e.l(2)), e.l(2));
        let x = e.product([&e.l(3), &e.t(1), &e.l(2), &e.t(2)]);
        assert_eq!(e.star(&e.star(&x)), x);
        let y = e.product([&e.t(2), &e.l(1)]);
        assert_eq!(
            e.star(&e.multiply(&x, &y)),
            e.multiply(&e.star(&y), &e.star(&x))
        );
    }

    #[test]
    fn right_l_matches_multiply() {
        let e = engine(3, 2);
        let x = e.product([&e.t(1), &e.l(2), &e.t(2)]);
        assert_eq!(e.right_l(&x, 3), e.multiply(&x, &e.l(3)));
    }

    #[test]
    fn dimension() {
        assert_eq!(engine(3, 2).dim(), 48);
        assert_eq!(engine(1, 1).dim(), 1);
    }
}
