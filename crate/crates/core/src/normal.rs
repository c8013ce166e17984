//! Normally ordered forms: finite combinations of `(a†)^j a^l`.

use alloc::collections::btree_map::{self, BTreeMap, Entry};
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::word::BosonWord;
use crate::Integer;

/// A linear combination `Σ c_{j,l} (a†)^j a^l` with nonzero integer
/// coefficients, keyed by `(j, l)` in ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    terms: BTreeMap<(usize, usize), Integer>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    /// The identity operator.
    pub fn one() -> Self {
        NormalForm::monomial(0, 0)
    }

    /// `(a†)^j a^l` with coefficient 1.
    pub fn monomial(j: usize, l: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((j, l), Integer::one());
        NormalForm { terms }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), Integer)>,
    {
        let mut nf = NormalForm::zero();
        for (key, c) in terms {
            nf.add_term(key, c);
        }
        nf
    }

    pub fn add_term(&mut self, key: (usize, usize), c: Integer) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, j: usize, l: usize) -> Integer {
        self.terms.get(&(j, l)).cloned().unwrap_or_default()
    }

    /// Terms in canonical order (ascending `j`, then `l`).
    pub fn terms(&self) -> btree_map::Iter<'_, (usize, usize), Integer> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// No terms; same as [`NormalForm::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn multiply(&self, other: &NormalForm) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(j1, l1), c1) in &self.terms {
            for (&(j2, l2), c2) in &other.terms {
                let c = c1 * c2;
                for (k, w) in contractions(l1, j2) {
                    out.add_term((j1 + j2 - k, l1 + l2 - k), &c * w);
                }
            }
        }
        out
    }
}

/// Coefficients of `a^l (a†)^r = Σ_k C(l,k) C(r,k) k! (a†)^{r-k} a^{l-k}`.
fn contractions(l: usize, r: usize) -> impl Iterator<Item = (usize, Integer)> {
    let kmax = l.min(r);
    let mut w = Integer::one();
    (0..=kmax).map(move |k| {
        let cur = w.clone();
        if k < kmax {
            // C(l,k+1) C(r,k+1) (k+1)! = C(l,k) C(r,k) k! · (l-k)(r-k)/(k+1)
            w = &w * ((l - k) * (r - k)) / (k + 1);
        }
        (k, cur)
    })
}

impl core::ops::Mul for &NormalForm {
    type Output = NormalForm;

    fn mul(self, rhs: &NormalForm) -> NormalForm {
        self.multiply(rhs)
    }
}

/// Normal ordering `N(w)`: all creators moved left with `a a† = a† a + 1`.
pub fn normal_order(w: &BosonWord) -> NormalForm {
    w.to_rs()
        .into_iter()
        .fold(NormalForm::one(), |acc, (r, s)| {
            acc.multiply(&NormalForm::monomial(r, s))
        })
}

/// `:w: = (a†)^{|w|_{a†}} a^{|w|_a}`, reordering as if `a` and `a†` commuted.
pub fn double_dot(w: &BosonWord) -> NormalForm {
    NormalForm::monomial(w.creators(), w.annihilators())
}

pub fn multiply_normal_forms(p: &NormalForm, q: &NormalForm) -> NormalForm {
    p.multiply(q)
}

/// `2 (a†)^0 a^2 + 3 (a†)^1 a^3`; the `(0, 0)` term prints as its bare coefficient.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(j, l), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{mag}")?,
                (0, true) => write!(f, "-{mag}")?,
                (_, false) => write!(f, " + {mag}")?,
                (_, true) => write!(f, " - {mag}")?,
            }
            if (j, l) != (0, 0) {
                write!(f, " (a†)^{j} a^{l}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn nf(terms: &[((usize, usize), i64)]) -> NormalForm {
        NormalForm::from_terms(terms.iter().map(|&(k, c)| (k, Integer::from(c))))
    }

    fn w(s: &str) -> BosonWord {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let got = normal_order(&w("a a+ a a a+ a"));
        assert_eq!(got, nf(&[((0, 2), 2), ((1, 3), 4), ((2, 4), 1)]));
        assert_eq!(
            got.to_string(),
            "2 (a†)^0 a^2 + 4 (a†)^1 a^3 + 1 (a†)^2 a^4"
        );
    }

    #[test]
    fn small_words() {
        assert_eq!(normal_order(&w("a+ a")), nf(&[((1, 1), 1)]));
        assert_eq!(normal_order(&w("a a+")), nf(&[((0, 0), 1), ((1, 1), 1)]));
        assert_eq!(normal_order(&BosonWord::empty()), NormalForm::one());
        assert_eq!(NormalForm::one().to_string(), "1");
        assert_eq!(normal_order(&w("a a+")).to_string(), "1 + 1 (a†)^1 a^1");
    }

    #[test]
    fn double_dot_examples() {
        assert_eq!(double_dot(&w("a a+ a a a+ a")), nf(&[((2, 4), 1)]));
        assert_eq!(double_dot(&BosonWord::empty()), NormalForm::one());
        assert_eq!(double_dot(&w("a+ a")), nf(&[((1, 1), 1)]));
    }

    #[test]
    fn products() {
        let n = nf(&[((1, 1), 1)]);
        assert_eq!(n.multiply(&n), nf(&[((1, 1), 1), ((2, 2), 1)]));
        let p = nf(&[((3, 1), 2), ((0, 0), -1)]);
        assert_eq!(NormalForm::one().multiply(&p), p);
        assert_eq!(p.multiply(&NormalForm::one()), p);
        assert_eq!(
            nf(&[((0, 1), 1)]).multiply(&nf(&[((1, 0), 1)])),
            nf(&[((0, 0), 1), ((1, 1), 1)])
        );
    }

    #[test]
    fn contraction_weights() {
        // a^2 (a†)^3 = (a†)^3 a^2 + 6 (a†)^2 a + 6 a†
        let got: alloc::vec::Vec<_> = contractions(2, 3).collect();
        assert_eq!(
            got,
            [(0, 1.into()), (1, 6.into()), (2, 6.into())]
        );
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut p = nf(&[((1, 0), 2)]);
        p.add_term((1, 0), Integer::from(-2));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
        assert_eq!(nf(&[((0, 0), -1), ((1, 1), -2)]).to_string(), "-1 - 2 (a†)^1 a^1");
    }
}
