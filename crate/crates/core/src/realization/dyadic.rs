use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// numerator / 2^exponent, with an odd numerator unless the exponent is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    exponent: u32,
}

impl DyadicRational {
    pub fn new(numerator: impl Into<BigInt>, exponent: u32) -> Self {
        let mut n = numerator.into();
        let mut e = exponent;
        if n.is_zero() {
            e = 0;
        }
        while e > 0 && n.is_even() {
            n >>= 1;
            e -= 1;
        }
        DyadicRational {
            numerator: n,
            exponent: e,
        }
    }

    pub fn integer(n: i64) -> Self {
        DyadicRational::new(n, 0)
    }

    pub fn zero() -> Self {
        DyadicRational::integer(0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    fn scaled(&self, exponent: u32) -> BigInt {
        &self.numerator << (exponent - self.exponent)
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        let e = self.exponent.max(other.exponent);
        DyadicRational::new(self.scaled(e) + other.scaled(e), e + 1)
    }

    pub fn abs(&self) -> Self {
        DyadicRational {
            numerator: self.numerator.abs(),
            exponent: self.exponent,
        }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), BigInt::one() << self.exponent)
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.numerator.to_f64().unwrap_or(f64::NAN);
        n / 2f64.powi(self.exponent as i32)
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        self.scaled(e).cmp(&other.scaled(e))
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: Self) -> DyadicRational {
        let e = self.exponent.max(rhs.exponent);
        DyadicRational::new(self.scaled(e) + rhs.scaled(e), e)
    }
}

impl Sub for &DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: Self) -> DyadicRational {
        self + &(-rhs)
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational {
            numerator: -&self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Mul for &DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: Self) -> DyadicRational {
        DyadicRational::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

impl FromStr for DyadicRational {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("not a dyadic rational: {s}");
        match s.split_once('/') {
            None => Ok(DyadicRational::new(s.trim().parse::<BigInt>().map_err(|_| bad())?, 0)),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d = d.trim();
                let e = match d.strip_prefix("2^") {
                    Some(e) => e.parse::<u32>().map_err(|_| bad())?,
                    None => {
                        let d: u64 = d.parse().map_err(|_| bad())?;
                        if !d.is_power_of_two() {
                            return Err(bad());
                        }
                        d.trailing_zeros()
                    }
                };
                Ok(DyadicRational::new(n, e))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    numerator: String,
    exponent: u32,
}

impl Serialize for DyadicRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            numerator: self.numerator.to_string(),
            exponent: self.exponent,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DyadicRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        let n: BigInt = r.numerator.parse().map_err(serde::de::Error::custom)?;
        Ok(DyadicRational::new(n, r.exponent))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let x = DyadicRational::new(6, 3);
        assert_eq!((x.numerator().clone(), x.exponent()), (BigInt::from(3), 2));
        assert_eq!(DyadicRational::new(0, 5).exponent(), 0);
        assert_eq!(DyadicRational::integer(0).midpoint(&DyadicRational::integer(1)), DyadicRational::new(1, 1));
        assert_eq!("3/8".parse::<DyadicRational>().unwrap(), DyadicRational::new(3, 3));
        assert_eq!("-5/2^4".parse::<DyadicRational>().unwrap(), DyadicRational::new(-5, 4));
        assert!("1/3".parse::<DyadicRational>().is_err());
        assert_eq!(DyadicRational::new(-5, 4).to_string(), "-5/2^4");
    }

    #[test]
    fn json_round_trip() {
        let x = DyadicRational::new(-7, 9);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"numerator":"-7","exponent":9}"#);
        assert_eq!(serde_json::from_str::<DyadicRational>(&s).unwrap(), x);
    }

    proptest! {
        #[test]
        fn agrees_with_rationals(a in -1000i64..1000, e in 0u32..12, b in -1000i64..1000, f in 0u32..12) {
            let (x, y) = (DyadicRational::new(a, e), DyadicRational::new(b, f));
            let (qx, qy) = (x.to_rational(), y.to_rational());
            prop_assert_eq!(x.cmp(&y), qx.cmp(&qy));
            prop_assert_eq!((&x + &y).to_rational(), &qx + &qy);
            prop_assert_eq!((&x - &y).to_rational(), &qx - &qy);
            prop_assert_eq!((&x * &y).to_rational(), &qx * &qy);
            let two = BigRational::from_integer(2.into());
            prop_assert_eq!(x.midpoint(&y).to_rational(), (qx + qy) / two);
        }
    }
}
