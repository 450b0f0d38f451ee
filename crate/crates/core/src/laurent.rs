use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// A Laurent polynomial in `q` with integer coefficients.
///
/// Terms are kept sorted by exponent with zero coefficients dropped, so
/// derived equality is mathematical equality. Serialized as a list of
/// `[exponent, coefficient]` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(i64, i64)>", into = "Vec<(i64, i64)>")]
pub struct LaurentPoly {
    terms: Vec<(i64, i64)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        Self::from_terms([(exp, coeff)])
    }

    /// Collects like terms; any order and repeated exponents are allowed.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c;
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    pub fn terms(&self) -> &[(i64, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> i64 {
        self.terms
            .binary_search_by_key(&exp, |&(e, _)| e)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|&(e, c)| (e + s, c)).collect(),
        }
    }

    /// `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }
}

impl From<Vec<(i64, i64)>> for LaurentPoly {
    fn from(terms: Vec<(i64, i64)>) -> Self {
        Self::from_terms(terms)
    }
}

impl From<LaurentPoly> for Vec<(i64, i64)> {
    fn from(p: LaurentPoly) -> Self {
        p.terms
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().chain(other.terms.iter()).copied())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, other: LaurentPoly) -> LaurentPoly {
        &self + &other
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .flat_map(|&(a, x)| other.terms.iter().map(move |&(b, y)| (a + b, x * y))),
        )
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        LaurentPoly::from_terms(iter.flat_map(|p| p.terms))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let c = c.abs();
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (e, 1) => write_power(f, e)?,
                (e, c) => {
                    write!(f, "{c}")?;
                    write_power(f, e)?
                }
            }
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = LaurentPoly::from_terms([(2, 1), (-1, 3), (2, -1), (0, 0)]);
        assert_eq!(p.terms(), &[(-1, 3)]);
        assert_eq!(LaurentPoly::monomial(4, 0), LaurentPoly::zero());
    }

    #[test]
    fn arithmetic() {
        let p = LaurentPoly::from_terms([(0, 1), (1, 1)]);
        let sq = &p * &p;
        assert_eq!(sq.terms(), &[(0, 1), (1, 2), (2, 1)]);
        assert_eq!(sq.shift(-1).bar(), sq.shift(-1));
        assert_eq!(sq.eval_at_one(), 4);
        assert_eq!((&p + &p.bar()).terms(), &[(-1, 1), (0, 2), (1, 1)]);
        assert_eq!(p.to_string(), "1 + q");
        assert_eq!(LaurentPoly::from_terms([(-2, -3)]).to_string(), "-3q^-2");
    }

    #[test]
    fn json_form() {
        let p = LaurentPoly::from_terms([(1, 2), (-1, 1)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[[-1,1],[1,2]]");
        assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), p);
        let messy: LaurentPoly = serde_json::from_str("[[3,1],[3,-1],[0,2]]").unwrap();
        assert_eq!(messy, LaurentPoly::monomial(0, 2));
    }
}
