use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Laurent polynomial with exact integer coefficients. Exponents are stored in
/// half-units: key `k` stands for `var^(k/2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid polynomial: {0}")]
pub struct PolyParseError(pub String);

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * var^(half_exp/2)`.
    pub fn monomial(coeff: i128, half_exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(half_exp, coeff);
        p
    }

    /// `coeff * var^exp` for an integer exponent.
    pub fn term(coeff: i128, exp: i64) -> Self {
        Self::monomial(coeff, 2 * exp)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i128)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, half_exp: i64, coeff: i128) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(half_exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&half_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms as `(half_exp, coeff)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, half_exp: i64) -> i128 {
        self.terms.get(&half_exp).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: i128) -> Self {
        Self::from_terms(self.terms().map(|(e, x)| (e, x * c)))
    }

    /// Multiplies by `var^(half_shift/2)`.
    pub fn shift(&self, half_shift: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + half_shift, c)).collect() }
    }

    /// `var -> var^-1`.
    pub fn invert_var(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Maps each term `var^e` to `sign * var^e2` where `(e2, sign) = f(e)`.
    pub fn map_exponents(&self, mut f: impl FnMut(i64) -> (i64, i128)) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| {
            let (e2, s) = f(e);
            (e2, c * s)
        }))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact division; `None` if `d` does not divide `self`. The leading
    /// coefficient of `d` must be ±1 for the quotient to be integral.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        let (dmax, dlead) = d.terms.iter().next_back().map(|(&e, &c)| (e, c))?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let dmin = d.min_exp().expect("nonzero");
        while let Some((rmax, rlead)) = rem.terms.iter().next_back().map(|(&e, &c)| (e, c)) {
            if rmax - dmax < rem.min_exp().expect("nonzero") - dmin || rlead % dlead != 0 {
                return None;
            }
            let t = LaurentPoly::monomial(rlead / dlead, rmax - dmax);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Sum of all coefficients (value at var = 1).
    pub fn eval_one(&self) -> i128 {
        self.terms.values().sum()
    }

    /// Renders terms ascending as `c*v^e`, with half-integer exponents written
    /// `v^(k/2)`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let exp = if e % 2 == 0 { format!("{}", e / 2) } else { format!("({}/2)", e) };
            if i == 0 {
                s += &format!("{c}*{var}^{exp}");
            } else if c < 0 {
                s += &format!(" - {}*{var}^{exp}", -c);
            } else {
                s += &format!(" + {c}*{var}^{exp}");
            }
        }
        s
    }

    /// Parses the output of [`to_text`](Self::to_text) (spaces optional).
    pub fn parse_text(text: &str, var: &str) -> Result<Self, PolyParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let err = |m: &str| PolyParseError(format!("{m} in {text:?}"));
        while start < bytes.len() {
            let mut end = start + 1;
            while end < bytes.len() && !(matches!(bytes[end], b'+' | b'-') && bytes[end - 1] != b'^' && bytes[end - 1] != b'(') {
                end += 1;
            }
            let tok = &compact[start..end];
            let (c, rest) = tok.split_once('*').ok_or_else(|| err("missing '*'"))?;
            let c: i128 = c.trim_start_matches('+').parse().map_err(|_| err("bad coefficient"))?;
            let exp = rest
                .strip_prefix(var)
                .and_then(|r| r.strip_prefix('^'))
                .ok_or_else(|| err("bad variable"))?;
            let half = if let Some(inner) = exp.strip_prefix('(').and_then(|r| r.strip_suffix("/2)")) {
                inner.parse::<i64>().map_err(|_| err("bad exponent"))?
            } else {
                2 * exp.parse::<i64>().map_err(|_| err("bad exponent"))?
            };
            p.add_term(half, c);
            start = end;
        }
        Ok(p)
    }
}

/// JSON form: `{"var":"q","terms":[[half_exp, coeff], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub terms: Vec<(i64, i128)>,
}

impl LaurentPoly {
    pub fn to_json_value(&self, var: &str) -> PolyJson {
        PolyJson { var: var.to_string(), terms: self.terms().collect() }
    }

    pub fn from_json_value(j: &PolyJson) -> Self {
        Self::from_terms(j.terms.iter().copied())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("q"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-8i64..8, -5i128..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn text_round_trip() {
        let p = LaurentPoly::from_terms([(-51, -1), (-49, 5), (4, 3)]);
        let s = p.to_text("t");
        assert_eq!(s, "-1*t^(-51/2) + 5*t^(-49/2) + 3*t^2");
        assert_eq!(LaurentPoly::parse_text(&s, "t").unwrap(), p);
        assert_eq!(LaurentPoly::zero().to_text("q"), "0");
        assert!(LaurentPoly::parse_text("3q", "q").is_err());
    }

    #[test]
    fn division() {
        let d = LaurentPoly::from_terms([(-2, 1), (2, 1)]);
        let p = LaurentPoly::from_terms([(-6, 2), (0, -3), (4, 1)]);
        assert_eq!((&p * &d).div_exact(&d).unwrap(), p);
        assert!(LaurentPoly::term(1, 0).div_exact(&d).is_none());
        assert!(LaurentPoly::term(1, 0).div_exact(&LaurentPoly::zero()).is_none());
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
            prop_assert_eq!(LaurentPoly::parse_text(&a.to_text("q"), "q").unwrap(), a.clone());
            if !b.is_zero() && b.max_exp().map(|e| b.coeff(e).abs()) == Some(1) {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
            }
        }
    }
}
