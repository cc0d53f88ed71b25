//! Elements of the field `Q(t)` in a canonical, comparable representation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Signed, Zero};

use super::{AlgebraError, Polynomial};

/// An exact ratio `numerator / denominator` of polynomials in `t`.
///
/// The representation is canonical: numerator and denominator are coprime, both
/// have integer coefficients with no common integer factor, and the lowest-order
/// nonzero coefficient of the denominator is positive. Zero is `0/1`. Structural
/// equality is therefore equality in `Q(t)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Polynomial::one(), den: Polynomial::one() }
    }

    pub fn t() -> Self {
        Self::from_poly(Polynomial::t())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Polynomial::from_ints(&[c]))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::normalize_content(p, Polynomial::one())
    }

    /// `c * t^k`
    pub fn monomial(c: i64, k: usize) -> Self {
        Self::from_poly(Polynomial::monomial(BigRational::from_integer(c.into()), k))
    }

    /// Convenience for literals: integer coefficient lists, ascending degree.
    /// Panics on a zero denominator.
    pub fn from_ints(num: &[i64], den: &[i64]) -> Self {
        Self::new(Polynomial::from_ints(num), Polynomial::from_ints(den)).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() || num.is_constant() {
            return Self::normalize_content(num, den);
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Self::normalize_content(num, den)
        } else {
            let n = num.exact_div(&g).expect("gcd is nonzero");
            let d = den.exact_div(&g).expect("gcd is nonzero");
            Self::normalize_content(n, d)
        }
    }

    /// Clears rational coefficients and the common integer content; fixes the sign.
    /// Assumes `num` and `den` are already coprime.
    fn normalize_content(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (cn, pn) = num.integer_content();
        let (cd, pd) = den.integer_content();
        // num/den = (cn/cd) * pn/pd; write cn/cd = a/b in lowest terms.
        let ratio = cn / cd;
        let a = ratio.numer().clone();
        let b = ratio.denom().clone();
        let mut n: Vec<BigInt> = pn.into_iter().map(|c| c * &a).collect();
        let mut d: Vec<BigInt> = pd.into_iter().map(|c| c * &b).collect();
        let low = d.iter().find(|c| !c.is_zero()).expect("nonzero denominator");
        if low.is_negative() {
            n.iter_mut().for_each(|c| *c = -&*c);
            d.iter_mut().for_each(|c| *c = -&*c);
        }
        RationalFunction { num: Polynomial::from_big_ints(n), den: Polynomial::from_big_ints(d) }
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn inv(&self) -> Result<RationalFunction, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> RationalFunction {
        // Powers of coprime polynomials stay coprime.
        Self::normalize_content(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale_int(&self, c: i64) -> RationalFunction {
        self * &RationalFunction::from_int(c)
    }

    /// `r(1/t)`, by reversing both coefficient sequences and rebalancing with a power of `t`.
    pub fn invert_t(&self) -> RationalFunction {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let rn = self.num.reverse();
        let rd = self.den.reverse();
        // num(1/t) = rn * t^{-dn}, den(1/t) = rd * t^{-dd}
        let (n, d) = if dd >= dn { (rn.shift(dd - dn), rd) } else { (rn, rd.shift(dn - dd)) };
        Self::reduce(n, d)
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// First `n + 1` Taylor coefficients at `t = 0`.
    pub fn series(&self, n: usize) -> Result<Vec<BigRational>, AlgebraError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(AlgebraError::NotAPowerSeries(self.to_string()));
        }
        let inv0 = d0.recip();
        let den = self.den.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for (j, dj) in den.iter().enumerate().skip(1).take(k) {
                if !dj.is_zero() {
                    acc -= dj * &out[k - j];
                }
            }
            out.push(acc * &inv0);
        }
        Ok(out)
    }
}

impl Polynomial {
    /// `p(r)` for a rational function `r`, evaluated over the common denominator:
    /// `sum c_k a^k b^{deg-k} / b^deg` where `r = a/b`.
    pub fn substitute(&self, r: &RationalFunction) -> RationalFunction {
        let Some(deg) = self.degree() else {
            return RationalFunction::zero();
        };
        let (a, b) = (r.numerator(), r.denominator());
        let mut a_pows = vec![Polynomial::one()];
        let mut b_pows = vec![Polynomial::one()];
        for _ in 0..deg {
            a_pows.push(a_pows.last().unwrap() * a);
            b_pows.push(b_pows.last().unwrap() * b);
        }
        let mut num = Polynomial::zero();
        for (k, c) in self.coeffs().iter().enumerate() {
            if !c.is_zero() {
                num = &num + &(&a_pows[k] * &b_pows[deg - k]).scale(c);
            }
        }
        RationalFunction::reduce(num, b_pows.pop().unwrap())
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // Cross-cancel so the product of reduced fractions stays reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.exact_div(&g1).unwrap(), rhs.den.exact_div(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.exact_div(&g2).unwrap(), self.den.exact_div(&g2).unwrap())
        };
        RationalFunction::normalize_content(&n1 * &n2, &d1 * &d2)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> std::iter::Sum<&'a RationalFunction> for RationalFunction {
    fn sum<I: Iterator<Item = &'a RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| &acc + x)
    }
}

/// Canonical text form `(c0 + c1*t + ...)/(d0 + d1*t + ...)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_ints(n, d)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn canonical_form_is_unique() {
        // (2 - 2t^2) / (-4 - 4t) = (t - 1)/2 ... written with positive low denominator
        let a = rf(&[2, 0, -2], &[-4, -4]);
        assert_eq!(a, rf(&[-1, 1], &[2]));
        assert_eq!(a.denominator(), &Polynomial::from_ints(&[2]));
        // sign lives on the numerator
        assert_eq!(rf(&[1], &[0, -1]).to_string(), "(-1)/(t)");
        assert_eq!(rf(&[0], &[5, 7]), RationalFunction::zero());
    }

    #[test]
    fn rational_coefficients_are_cleared() {
        let half = BigRational::new(1.into(), 2.into());
        let p = Polynomial::new(vec![half.clone(), half]);
        let r = RationalFunction::new(p, Polynomial::from_ints(&[3])).unwrap();
        assert_eq!(r, rf(&[1, 1], &[6]));
    }

    #[test]
    fn arithmetic_examples() {
        let u = rf(&[1], &[1, 0, -1]);
        let v = rf(&[0, -1], &[1, 0, -1]);
        assert!((&u + &(&v * &RationalFunction::t())).is_one());
        assert_eq!(&v * &v, rf(&[0, 0, 1], &[1, 0, -2, 0, 1]));
        let s = &RationalFunction::one().checked_div(&rf(&[1, 1], &[1])).unwrap()
            + &RationalFunction::t().checked_div(&rf(&[1, 1], &[1])).unwrap();
        assert!(s.is_one());
        assert_eq!(RationalFunction::one().checked_div(&RationalFunction::zero()), Err(AlgebraError::DivisionByZero));
        assert_eq!(rf(&[1, 1], &[1, -1]).pow(2), rf(&[1, 2, 1], &[1, -2, 1]));
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
    }

    #[test]
    fn substitution_examples() {
        let f = Polynomial::from_ints(&[1, 2]);
        assert_eq!(f.substitute(&rf(&[0, -1], &[1, 1])), rf(&[1, -1], &[1, 1]));
        assert_eq!(f.substitute(&rf(&[0, 0, 1], &[1, 0, -1])), rf(&[1, 0, 1], &[1, 0, -1]));
        assert!(Polynomial::one().substitute(&rf(&[3, 1], &[0, 1])).is_one());
        assert!(Polynomial::zero().substitute(&RationalFunction::t()).is_zero());
    }

    #[test]
    fn series_examples() {
        let s = rf(&[1, 1], &[1, -1]).series(4).unwrap();
        assert_eq!(s, [1, 2, 2, 2, 2].map(q));
        assert_eq!(rf(&[1], &[1, 0, -1]).series(4).unwrap(), [1, 0, 1, 0, 1].map(q));
        assert_eq!(RationalFunction::one().series(2).unwrap(), [1, 0, 0].map(q));
        assert!(matches!(rf(&[1], &[0, 1]).series(3), Err(AlgebraError::NotAPowerSeries(_))));
    }

    #[test]
    fn invert_t_examples() {
        let g = rf(&[1, 1], &[1, -1]);
        assert_eq!(g.invert_t(), -&g);
        assert_eq!(RationalFunction::t().invert_t(), rf(&[1], &[0, 1]));
        let c = rf(&[0, 0, 1], &[1, 0, -2, 0, 1]);
        assert_eq!(c.invert_t(), c);
        assert_eq!(rf(&[1], &[1, 0, -1]).invert_t(), rf(&[0, 0, -1], &[1, 0, -1]));
        assert!(RationalFunction::zero().invert_t().is_zero());
    }

    #[test]
    fn evaluation() {
        let r = rf(&[1, 1], &[1, -1]);
        assert_eq!(r.eval(&q(3)), Some(q(-2)));
        assert_eq!(r.eval(&q(1)), None);
    }
}
