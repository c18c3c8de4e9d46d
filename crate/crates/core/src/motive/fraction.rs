use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Polynomial;

/// A quotient of integer polynomials in lowest terms: coprime numerator and
/// denominator, joint content one, positive leading denominator coefficient.
/// Equal fractions have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotiveFraction {
    num: Polynomial,
    den: Polynomial,
}

impl MotiveFraction {
    /// Panics if `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from(Polynomial::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.div_poly_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_poly_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_exact(&c);
            den = den.div_exact(&c);
        }
        MotiveFraction { num, den }
    }

    pub fn zero() -> Self {
        Self::from(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from(Polynomial::one())
    }

    /// `L^k` for any integer `k`.
    pub fn lefschetz_power(k: i64) -> Self {
        if k >= 0 {
            Self::from(Polynomial::monomial(k as usize))
        } else {
            MotiveFraction {
                num: Polynomial::one(),
                den: Polynomial::monomial((-k) as usize),
            }
        }
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

    /// The polynomial, when the denominator is one.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        (self.den == Polynomial::one()).then_some(&self.num)
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at an integer where the denominator does not vanish.
    pub fn eval(&self, x: &BigInt) -> Option<num_rational::BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| num_rational::BigRational::new(self.num.eval(x), d))
    }

    /// `num` if the denominator is one, else `(num) / (den)`.
    pub fn render(&self, var: &str) -> String {
        match self.as_polynomial() {
            Some(p) => p.render(var),
            None => format!("({}) / ({})", self.num.render(var), self.den.render(var)),
        }
    }
}

impl From<Polynomial> for MotiveFraction {
    fn from(p: Polynomial) -> Self {
        MotiveFraction {
            num: p,
            den: Polynomial::one(),
        }
    }
}

impl fmt::Display for MotiveFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("L"))
    }
}

impl Add for &MotiveFraction {
    type Output = MotiveFraction;
    fn add(self, rhs: &MotiveFraction) -> MotiveFraction {
        if self.den == rhs.den {
            return MotiveFraction::new(&self.num + &rhs.num, self.den.clone());
        }
        MotiveFraction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &MotiveFraction {
    type Output = MotiveFraction;
    fn neg(self) -> MotiveFraction {
        MotiveFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &MotiveFraction {
    type Output = MotiveFraction;
    fn sub(self, rhs: &MotiveFraction) -> MotiveFraction {
        self + &(-rhs)
    }
}

impl Mul for &MotiveFraction {
    type Output = MotiveFraction;
    fn mul(self, rhs: &MotiveFraction) -> MotiveFraction {
        MotiveFraction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &MotiveFraction {
    type Output = MotiveFraction;
    /// Panics on division by zero.
    fn div(self, rhs: &MotiveFraction) -> MotiveFraction {
        MotiveFraction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}
