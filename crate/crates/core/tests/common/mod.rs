//! Reference implementations shared by the integration tests. None of this
//! code goes through the crate's normal-ordering kernel or series engine.
#![allow(dead_code)]

use std::collections::BTreeMap;

use normord_core::{BosonWord, Integer, Letter, NormalForm};

/// Exhaustive rewriting with the single rule `a a† → a† a + 1`, applied to the
/// leftmost offending pair until every word is normally ordered.
pub fn rewrite_normal_order(w: &BosonWord) -> NormalForm {
    let mut pending: Vec<(Vec<Letter>, i64)> = vec![(w.letters().to_vec(), 1)];
    let mut done: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    while let Some((word, c)) = pending.pop() {
        let swap = word
            .windows(2)
            .position(|p| p == [Letter::Annihilator, Letter::Creator]);
        match swap {
            None => {
                let j = word.iter().filter(|&&l| l == Letter::Creator).count();
                *done.entry((j, word.len() - j)).or_default() += c;
            }
            Some(i) => {
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                let mut contracted = word;
                contracted.drain(i..i + 2);
                pending.push((swapped, c));
                pending.push((contracted, c));
            }
        }
    }
    NormalForm::from_terms(done.into_iter().map(|(k, c)| (k, Integer::from(c))))
}

pub fn all_words(max_len: usize) -> Vec<BosonWord> {
    let mut out = vec![BosonWord::empty()];
    for len in 1..=max_len {
        for bits in 0..(1u32 << len) {
            let letters = (0..len)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Letter::Creator
                    } else {
                        Letter::Annihilator
                    }
                })
                .collect();
            out.push(BosonWord::new(letters));
        }
    }
    out
}

/// Small exact fraction over i128, reduced, positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac(pub i128, pub i128);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    pub fn new(n: i128, d: i128) -> Frac {
        assert!(d != 0);
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Frac(s * n / g, s * d / g)
    }
    pub fn int(n: i128) -> Frac {
        Frac(n, 1)
    }
    pub fn add(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }
    pub fn sub(self, o: Frac) -> Frac {
        self.add(Frac(-o.0, o.1))
    }
    pub fn mul(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.0, self.1 * o.1)
    }
    pub fn div(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1, self.1 * o.0)
    }
}

/// Polynomial coefficients truncated at a fixed order.
pub fn poly_mul(a: &[Frac], b: &[Frac]) -> Vec<Frac> {
    let n = a.len().min(b.len());
    let mut out = vec![Frac::int(0); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] = out[i + j].add(a[i].mul(b[j]));
        }
    }
    out
}

/// Long division of power series `a / b`, `b[0] != 0`.
pub fn poly_div(a: &[Frac], b: &[Frac]) -> Vec<Frac> {
    let n = a.len().min(b.len());
    let mut q = vec![Frac::int(0); n];
    let mut rem: Vec<Frac> = a[..n].to_vec();
    for i in 0..n {
        q[i] = rem[i].div(b[0]);
        for j in i..n {
            rem[j] = rem[j].sub(q[i].mul(b[j - i]));
        }
    }
    q
}

/// Direct evaluation of both sides of `c_k = [c_0 (c_1/c_0)^k / k!]_n` for
/// an integer lower-unitriangular matrix. Returns the list of failing k.
pub fn eq14_failing_columns(m: &[Vec<i64>]) -> Vec<usize> {
    let n = m.len() - 1;
    let fact = |i: usize| (1..=i as i128).product::<i128>();
    let col = |k: usize| -> Vec<Frac> {
        (0..=n).map(|i| Frac::new(m[i][k] as i128, fact(i))).collect()
    };
    let c0 = col(0);
    let phi = if n >= 1 { poly_div(&col(1), &c0) } else { vec![Frac::int(0)] };
    let mut failing = Vec::new();
    for k in 0..=n {
        let mut rhs = c0.clone();
        for _ in 0..k {
            rhs = poly_mul(&rhs, &phi);
        }
        let rhs: Vec<Frac> = rhs.iter().map(|c| c.div(Frac::int(fact(k)))).collect();
        if rhs != col(k) {
            failing.push(k);
        }
    }
    failing
}

/// Example tables: the word and its printed rows.
pub const STIRLING_A_DAG_A: &[&[i64]] = &[
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 3, 1],
    &[0, 1, 7, 6, 1],
    &[0, 1, 15, 25, 10, 1],
    &[0, 1, 31, 90, 65, 15, 1],
];

pub const STIRLING_A_DAG_A_A_DAG: &[&[i64]] = &[
    &[1],
    &[1, 1],
    &[2, 4, 1],
    &[6, 18, 9, 1],
    &[24, 96, 72, 16, 1],
    &[120, 600, 600, 200, 25, 1],
    &[720, 4320, 5400, 2400, 450, 36, 1],
];

pub const STIRLING_THIRD: &[&[i64]] = &[
    &[1],
    &[2, 4, 1],
    &[12, 60, 54, 14, 1],
    &[144, 1296, 2232, 1296, 306, 30, 1],
    &[2880, 40320, 109440, 105120, 45000, 9504, 1016, 52, 1],
];

pub fn golden_tables() -> [(&'static str, &'static [&'static [i64]]); 3] {
    [
        ("a+ a", STIRLING_A_DAG_A),
        ("a+ a a+", STIRLING_A_DAG_A_A_DAG),
        ("a+ a a a+ a+", STIRLING_THIRD),
    ]
}

pub fn int_rows(rows: &[&[i64]]) -> Vec<Vec<Integer>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Integer::from(v)).collect())
        .collect()
}

/// Words `(a†)^{r-p} a (a†)^p` with `1 <= r` and total length at most `max_len`.
pub fn single_annihilator_words(max_len: usize) -> Vec<BosonWord> {
    let mut out = Vec::new();
    for r in 1..max_len {
        for p in 0..=r {
            out.push(BosonWord::from_rs(&[(r - p, 1), (p, 0)]));
        }
    }
    out
}
