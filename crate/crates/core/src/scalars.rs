//! Exact fields: the rationals, prime fields `F_p`, and cyclotomic fields
//! `Q(ζ_r) = Q[x]/Φ_r(x)`.
//!
//! A [`Field`] is an arithmetic context; [`Scalar`] values are plain data in
//! canonical form, so equality of scalars is structural equality. Mixing
//! scalars from different fields is a programming error and panics.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which exact field to compute over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldDescriptor {
    Rationals,
    PrimeField { p: u64 },
    Cyclotomic { r: u32 },
}

impl FieldDescriptor {
    /// Parses the CLI spelling: `q`, `fp:<p>`, `cyc:<r>`.
    pub fn parse_flag(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s == "rationals" {
            return Ok(FieldDescriptor::Rationals);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in {s:?}")))?;
            return Ok(FieldDescriptor::PrimeField { p });
        }
        if let Some(r) = s.strip_prefix("cyc:") {
            let r = r
                .parse()
                .map_err(|_| Error::Parse(format!("bad order in {s:?}")))?;
            return Ok(FieldDescriptor::Cyclotomic { r });
        }
        Err(Error::Parse(format!(
            "unknown field {s:?}; expected q, fp:<p> or cyc:<r>"
        )))
    }

    pub fn flag(&self) -> String {
        match self {
            FieldDescriptor::Rationals => "q".into(),
            FieldDescriptor::PrimeField { p } => format!("fp:{p}"),
            FieldDescriptor::Cyclotomic { r } => format!("cyc:{r}"),
        }
    }
}

/// An element of one of the supported fields, always in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Reduced fraction.
    Rational(BigRational),
    /// Least non-negative residue.
    Modular(u64),
    /// Coefficients `c_0 .. c_{φ(r)-1}` of the reduced polynomial in ζ.
    Cyclotomic(Vec<BigRational>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular(v) => *v == 0,
            Scalar::Cyclotomic(c) => c.iter().all(Zero::is_zero),
        }
    }
}

/// Arithmetic context for one exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    desc: FieldDescriptor,
    /// Monic Φ_r, low degree first, including the leading 1.
    modulus: Vec<BigRational>,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Quotient and remainder of polynomials over Q (low degree first).
fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = num.to_vec();
    poly_trim(&mut rem);
    let mut den = den.to_vec();
    poly_trim(&mut den);
    assert!(!den.is_empty(), "polynomial division by zero");
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd && !rem.is_empty() {
        let k = rem.len() - 1 - dd;
        let c = &rem[rem.len() - 1] / &lead;
        for (i, d) in den.iter().enumerate() {
            let t = &c * d;
            rem[k + i] -= t;
        }
        quot[k] = c;
        poly_trim(&mut rem);
    }
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

/// The r-th cyclotomic polynomial, monic, low degree first.
pub fn cyclotomic_polynomial(r: u32) -> Vec<BigRational> {
    // x^r - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![BigRational::zero(); r as usize + 1];
    p[0] = rat(-1);
    p[r as usize] = rat(1);
    for d in 1..r {
        if r.is_multiple_of(d) {
            let (q, rem) = poly_divmod(&p, &cyclotomic_polynomial(d));
            debug_assert!(rem.is_empty());
            p = q;
        }
    }
    p
}

impl Field {
    pub fn new(desc: FieldDescriptor) -> Result<Self> {
        let modulus = match &desc {
            FieldDescriptor::Rationals => Vec::new(),
            FieldDescriptor::PrimeField { p } => {
                if !is_prime(*p) || *p >= (1u64 << 62) {
                    return Err(Error::NotPrime(*p));
                }
                Vec::new()
            }
            FieldDescriptor::Cyclotomic { r } => {
                if *r < 1 {
                    return Err(Error::InvalidCyclotomicOrder(*r));
                }
                cyclotomic_polynomial(*r)
            }
        };
        Ok(Field { desc, modulus })
    }

    pub fn rationals() -> Self {
        Field {
            desc: FieldDescriptor::Rationals,
            modulus: Vec::new(),
        }
    }

    pub fn prime(p: u64) -> Result<Self> {
        Field::new(FieldDescriptor::PrimeField { p })
    }

    pub fn cyclotomic(r: u32) -> Result<Self> {
        Field::new(FieldDescriptor::Cyclotomic { r })
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.desc
    }

    pub fn characteristic(&self) -> u64 {
        match self.desc {
            FieldDescriptor::PrimeField { p } => p,
            _ => 0,
        }
    }

    /// Degree over the prime field (φ(r) for cyclotomic fields).
    pub fn degree(&self) -> usize {
        match self.desc {
            FieldDescriptor::Cyclotomic { .. } => self.modulus.len() - 1,
            _ => 1,
        }
    }

    fn p(&self) -> u64 {
        match self.desc {
            FieldDescriptor::PrimeField { p } => p,
            _ => unreachable!(),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.desc {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::zero()),
            FieldDescriptor::PrimeField { .. } => Scalar::Modular(0),
            FieldDescriptor::Cyclotomic { .. } => {
                Scalar::Cyclotomic(vec![BigRational::zero(); self.degree()])
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_rational(&rat(v))
            .expect("integers embed in every field")
    }

    /// Image of a rational number; fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self.desc {
            FieldDescriptor::Rationals => Ok(Scalar::Rational(q.clone())),
            FieldDescriptor::PrimeField { p } => {
                let pm = BigInt::from(p);
                let n = q.numer().mod_floor(&pm).to_u64().unwrap();
                let d = q.denom().mod_floor(&pm).to_u64().unwrap();
                let d = self.inv(&Scalar::Modular(d))?;
                Ok(self.mul(&Scalar::Modular(n), &d))
            }
            FieldDescriptor::Cyclotomic { .. } => {
                let mut c = vec![BigRational::zero(); self.degree()];
                c[0] = q.clone();
                Ok(Scalar::Cyclotomic(c))
            }
        }
    }

    /// The generator ζ of a cyclotomic field.
    pub fn zeta(&self) -> Option<Scalar> {
        match self.desc {
            FieldDescriptor::Cyclotomic { .. } => {
                let mut c = vec![BigRational::zero(); self.degree().max(2)];
                c[1] = rat(1);
                Some(self.reduce_poly(c))
            }
            _ => None,
        }
    }

    fn reduce_poly(&self, mut c: Vec<BigRational>) -> Scalar {
        let deg = self.degree();
        while c.len() > deg {
            let top = c.pop().unwrap();
            if !top.is_zero() {
                let k = c.len() - deg;
                for i in 0..deg {
                    let t = &top * &self.modulus[i];
                    c[k + i] -= t;
                }
            }
        }
        c.resize(deg, BigRational::zero());
        Scalar::Cyclotomic(c)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Modular(x), Scalar::Modular(y)) => Scalar::Modular((x + y) % self.p()),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => {
                Scalar::Cyclotomic(x.iter().zip(y).map(|(u, v)| u + v).collect())
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn add_assign(&self, a: &mut Scalar, b: &Scalar) {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => *x += y,
            (Scalar::Modular(x), Scalar::Modular(y)) => *x = (*x + y) % self.p(),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => {
                for (u, v) in x.iter_mut().zip(y) {
                    *u += v;
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Modular(x) => Scalar::Modular((self.p() - x) % self.p()),
            Scalar::Cyclotomic(x) => Scalar::Cyclotomic(x.iter().map(|u| -u).collect()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular(((*x as u128 * *y as u128) % self.p() as u128) as u64)
            }
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => self.reduce_poly(poly_mul(x, y)),
            _ => panic!("scalars from different fields"),
        }
    }

    /// `acc += x * y`.
    pub fn mul_add_assign(&self, acc: &mut Scalar, x: &Scalar, y: &Scalar) {
        match (acc, x, y) {
            (Scalar::Rational(a), Scalar::Rational(u), Scalar::Rational(v)) => *a += u * v,
            (Scalar::Modular(a), Scalar::Modular(u), Scalar::Modular(v)) => {
                let p = self.p() as u128;
                *a = ((*a as u128 + (*u as u128 * *v as u128) % p) % p) as u64;
            }
            (acc, x, y) => {
                let t = self.mul(x, y);
                self.add_assign(acc, &t);
            }
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match a {
            Scalar::Rational(x) => Scalar::Rational(x.recip()),
            Scalar::Modular(x) => {
                let p = self.p() as i128;
                let (mut old_r, mut r) = (*x as i128, p);
                let (mut old_s, mut s) = (1i128, 0i128);
                while r != 0 {
                    let q = old_r / r;
                    (old_r, r) = (r, old_r - q * r);
                    (old_s, s) = (s, old_s - q * s);
                }
                Scalar::Modular(old_s.rem_euclid(p) as u64)
            }
            Scalar::Cyclotomic(x) => {
                // Extended Euclid: find s with s·x ≡ 1 mod Φ_r.
                let mut a_poly = x.clone();
                poly_trim(&mut a_poly);
                let (mut old_r, mut r) = (self.modulus.clone(), a_poly);
                let (mut old_s, mut s): (Vec<BigRational>, Vec<BigRational>) =
                    (Vec::new(), vec![rat(1)]);
                while !r.is_empty() {
                    let (q, rem) = poly_divmod(&old_r, &r);
                    old_r = std::mem::replace(&mut r, rem);
                    let next_s = poly_sub(&old_s, &poly_mul(&q, &s));
                    old_s = std::mem::replace(&mut s, next_s);
                }
                // old_r is a nonzero constant since Φ_r is irreducible.
                debug_assert_eq!(old_r.len(), 1);
                let c = old_r[0].recip();
                let inv: Vec<BigRational> = old_s.iter().map(|u| u * &c).collect();
                self.reduce_poly(inv)
            }
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, k: u32) -> Scalar {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    /// Brings an arbitrary representation into canonical form.
    pub fn normalize(&self, a: Scalar) -> Scalar {
        match a {
            Scalar::Rational(q) => {
                Scalar::Rational(BigRational::new(q.numer().clone(), q.denom().clone()))
            }
            Scalar::Modular(v) => Scalar::Modular(v % self.p()),
            Scalar::Cyclotomic(c) => self.reduce_poly(c),
        }
    }

    /// Canonical report string.
    pub fn format(&self, a: &Scalar) -> String {
        fn q(x: &BigRational) -> String {
            format!("{}/{}", x.numer(), x.denom())
        }
        match a {
            Scalar::Rational(x) => q(x),
            Scalar::Modular(v) => format!("{v} mod {}", self.p()),
            Scalar::Cyclotomic(c) => {
                let parts: Vec<String> = c.iter().map(q).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    /// Parses a canonical string, and also plain integers or fractions in any field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("cannot parse scalar {s:?}"));
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            if !matches!(self.desc, FieldDescriptor::Cyclotomic { .. }) {
                return Err(bad());
            }
            let mut coeffs = Vec::new();
            for part in inner.split(',').filter(|p| !p.trim().is_empty()) {
                coeffs.push(parse_rational(part).ok_or_else(bad)?);
            }
            return Ok(self.reduce_poly(coeffs));
        }
        if let Some((v, p)) = s.split_once(" mod ") {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            if self.characteristic() != p {
                return Err(Error::Parse(format!(
                    "{s:?} is not in {}",
                    self.desc.flag()
                )));
            }
            let v: i64 = v.trim().parse().map_err(|_| bad())?;
            return Ok(self.from_i64(v));
        }
        let q = parse_rational(s).ok_or_else(bad)?;
        self.from_rational(&q)
    }

    /// A small random element, used for seeded property checks.
    pub fn random<R: Rng>(&self, rng: &mut R) -> Scalar {
        match self.desc {
            FieldDescriptor::Rationals => {
                let n: i64 = rng.gen_range(-5..=5);
                let d: i64 = rng.gen_range(1..=4);
                Scalar::Rational(BigRational::new(n.into(), d.into()))
            }
            FieldDescriptor::PrimeField { p } => Scalar::Modular(rng.gen_range(0..p)),
            FieldDescriptor::Cyclotomic { .. } => {
                let c = (0..self.degree())
                    .map(|_| {
                        BigRational::new(
                            rng.gen_range(-3i64..=3).into(),
                            rng.gen_range(1i64..=3).into(),
                        )
                    })
                    .collect();
                Scalar::Cyclotomic(c)
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.flag())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn rational_addition() {
        let q = Field::rationals();
        let a = q.parse("1/2").unwrap();
        let b = q.parse("1/3").unwrap();
        assert_eq!(q.format(&q.add(&a, &b)), "5/6");
        assert_eq!(q.format(&q.inv(&q.parse("3/4").unwrap()).unwrap()), "4/3");
    }

    #[test]
    fn prime_field_inverses() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.inv(&Scalar::Modular(2)).unwrap(), Scalar::Modular(3));
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.inv(&Scalar::Modular(3)).unwrap(), Scalar::Modular(5));
        assert_eq!(f7.format(&Scalar::Modular(5)), "5 mod 7");
        assert_eq!(f7.parse("-2").unwrap(), Scalar::Modular(5));
    }

    #[test]
    fn bad_descriptors() {
        assert_eq!(Field::prime(6), Err(Error::NotPrime(6)));
        assert_eq!(Field::cyclotomic(0), Err(Error::InvalidCyclotomicOrder(0)));
        assert_eq!(
            Field::rationals().inv(&Field::rationals().zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn cyclotomic_polynomials() {
        let c = |r| -> Vec<i64> {
            cyclotomic_polynomial(r)
                .iter()
                .map(|x| x.to_integer().to_i64().unwrap())
                .collect()
        };
        assert_eq!(c(1), vec![-1, 1]);
        assert_eq!(c(4), vec![1, 0, 1]);
        assert_eq!(c(3), vec![1, 1, 1]);
        assert_eq!(c(6), vec![1, -1, 1]);
    }

    #[test]
    fn zeta_relations() {
        let k4 = Field::cyclotomic(4).unwrap();
        let z = k4.zeta().unwrap();
        assert_eq!(k4.mul(&z, &z), k4.from_i64(-1));
        let k3 = Field::cyclotomic(3).unwrap();
        let z = k3.zeta().unwrap();
        assert_eq!(k3.inv(&z).unwrap(), k3.mul(&z, &z));
        assert_eq!(k3.pow(&z, 3), k3.one());
        assert_eq!(k3.format(&z), "[0/1,1/1]");
        assert_eq!(k3.parse("[0,1]").unwrap(), z);
    }

    fn fields() -> Vec<Field> {
        vec![
            Field::rationals(),
            Field::prime(5).unwrap(),
            Field::prime(7).unwrap(),
            Field::cyclotomic(3).unwrap(),
            Field::cyclotomic(5).unwrap(),
        ]
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for k in fields() {
            for _ in 0..200 {
                let (a, b, c) = (k.random(&mut rng), k.random(&mut rng), k.random(&mut rng));
                assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
                assert_eq!(k.add(&k.add(&a, &b), &c), k.add(&a, &k.add(&b, &c)));
                assert_eq!(
                    k.mul(&a, &k.add(&b, &c)),
                    k.add(&k.mul(&a, &b), &k.mul(&a, &c))
                );
                assert_eq!(k.mul(&a, &b), k.mul(&b, &a));
                if !a.is_zero() {
                    assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
                }
                assert!(k.add(&a, &k.neg(&a)).is_zero());
                let mut acc = a.clone();
                k.mul_add_assign(&mut acc, &b, &c);
                assert_eq!(acc, k.add(&a, &k.mul(&b, &c)));
            }
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for k in fields() {
            for _ in 0..50 {
                let a = k.random(&mut rng);
                let n = k.normalize(a.clone());
                assert_eq!(k.normalize(n.clone()), n);
                assert_eq!(k.parse(&k.format(&n)).unwrap(), n);
            }
        }
    }
}
