//! Exact arithmetic in GF(p^e) for p^e <= 64, projective points of F_q^d,
//! and the standard symplectic form.
//!
//! Elements are stored by index: the coefficient vector `(c_0, .., c_{e-1})`
//! of `c_0 + c_1 x + .. + c_{e-1} x^{e-1}` maps to `sum c_i p^i`. Addition and
//! multiplication go through precomputed tables.

use std::fmt;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("field order {p}^{e} is not supported (must be at most {MAX_ORDER})")]
    UnsupportedOrder { p: usize, e: usize },
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("vector lengths {0} and {1} do not match")]
    DimensionMismatch(usize, usize),
}

/// Lexicographically least monic irreducible of degree `e` over GF(p),
/// listed as low-order coefficients (the leading 1 is implicit). "Least"
/// means smallest `sum c_i p^i`.
const REDUCTION_POLYS: &[(usize, usize, &[u8])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 0, 0, 0]),
    (3, 2, &[1, 0]),
    (3, 3, &[1, 2, 0]),
    (5, 2, &[2, 0]),
    (7, 2, &[1, 0]),
];

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Splits `q` as `p^e` with `p` prime.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// A field element, meaningful only together with the [`Field`] that produced it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone)]
pub struct Field {
    p: usize,
    e: usize,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    generator: FieldElement,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.e)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        (self.p, self.e) == (other.p, other.e)
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(p: usize, e: usize) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let q = p
            .checked_pow(e as u32)
            .filter(|&q| e >= 1 && q <= MAX_ORDER)
            .ok_or(FieldError::UnsupportedOrder { p, e })?;
        let modulus = if e == 1 {
            Vec::new()
        } else {
            REDUCTION_POLYS
                .iter()
                .find(|(pp, ee, _)| (*pp, *ee) == (p, e))
                .map(|(_, _, c)| c.to_vec())
                .ok_or(FieldError::UnsupportedOrder { p, e })?
        };
        assert!(
            e == 1 || is_irreducible(p, &modulus),
            "baked reduction polynomial for GF({p}^{e}) is reducible"
        );

        let coeffs = |x: usize| -> Vec<u8> { (0..e).map(|i| (x / p.pow(i as u32) % p) as u8).collect() };
        let index = |c: &[u8]| -> usize { c.iter().rev().fold(0, |acc, &d| acc * p + d as usize) };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let ca = coeffs(a);
            for b in 0..q {
                let cb = coeffs(b);
                let sum: Vec<u8> = ca.iter().zip(&cb).map(|(x, y)| ((x + y) as usize % p) as u8).collect();
                add[a * q + b] = index(&sum) as u8;
                mul[a * q + b] = index(&poly_mul_mod(p, &ca, &cb, &modulus)) as u8;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8
                }
            })
            .collect();

        let mut field = Field {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            generator: FieldElement::ONE,
        };
        field.generator = field
            .elements()
            .skip(1)
            .find(|&g| field.multiplicative_order(g) == q - 1)
            .expect("multiplicative group of a finite field is cyclic");
        if q <= 16 {
            assert!(field.verify_axioms_exhaustive(), "field axioms fail for {field:?}");
        } else {
            assert!(field.verify_axioms_sampled(), "field axioms fail for {field:?}");
        }
        Ok(field)
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: usize) -> Result<Field, FieldError> {
        let (p, e) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Field::new(p, e)
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Low-order coefficients of the reduction polynomial (empty for prime fields).
    pub fn reduction_polynomial(&self) -> &[u8] {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(|i| FieldElement(i as u8))
    }

    pub fn element(&self, index: usize) -> FieldElement {
        assert!(index < self.q);
        FieldElement(index as u8)
    }

    /// Coefficient vector of `a`, constant term first.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u8> {
        (0..self.e)
            .map(|i| (a.index() / self.p.pow(i as u32) % self.p) as u8)
            .collect()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.index() * self.q + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.index() * self.q + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.index()])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (!a.is_zero()).then(|| FieldElement(self.inv[a.index()]))
    }

    pub fn pow(&self, a: FieldElement, mut k: usize) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        self.elements().any(|x| self.mul(x, x) == a)
    }

    fn multiplicative_order(&self, a: FieldElement) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != FieldElement::ONE {
            x = self.mul(x, a);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    fn axioms_hold(&self, a: FieldElement, b: FieldElement, c: FieldElement) -> bool {
        self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
            && self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
            && self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
            && self.add(a, b) == self.add(b, a)
            && self.mul(a, b) == self.mul(b, a)
    }

    fn unit_axioms_hold(&self, a: FieldElement) -> bool {
        self.add(a, FieldElement::ZERO) == a
            && self.mul(a, FieldElement::ONE) == a
            && self.add(a, self.neg(a)) == FieldElement::ZERO
            && self.inv(a).is_none_or(|i| self.mul(a, i) == FieldElement::ONE)
    }

    /// Checks the field axioms over every triple of elements.
    pub fn verify_axioms_exhaustive(&self) -> bool {
        self.elements().all(|a| self.unit_axioms_hold(a))
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| self.elements().all(|c| self.axioms_hold(a, b, c)))
            })
    }

    /// Unit axioms everywhere, ring axioms on a deterministic sample of triples.
    pub fn verify_axioms_sampled(&self) -> bool {
        let q = self.q as u64;
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            FieldElement((state % q) as u8)
        };
        self.elements().all(|a| self.unit_axioms_hold(a))
            && (0..4096).all(|_| {
                let (a, b, c) = (next(), next(), next());
                self.axioms_hold(a, b, c)
            })
    }
}

fn poly_mul_mod(p: usize, a: &[u8], b: &[u8], modulus: &[u8]) -> Vec<u8> {
    let e = a.len();
    let mut prod = vec![0usize; 2 * e.max(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as usize * y as usize) % p;
        }
    }
    // x^e = -(modulus) reduces every term of degree >= e
    for d in (e..prod.len()).rev() {
        let c = prod[d];
        if c == 0 || modulus.is_empty() {
            continue;
        }
        prod[d] = 0;
        for (i, &m) in modulus.iter().enumerate() {
            prod[d - e + i] = (prod[d - e + i] + (p - c) * m as usize) % p;
        }
    }
    prod.truncate(e);
    prod.into_iter().map(|c| c as u8).collect()
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=e/2` divides.
pub fn is_irreducible(p: usize, low_coeffs: &[u8]) -> bool {
    let e = low_coeffs.len();
    let mut poly: Vec<usize> = low_coeffs.iter().map(|&c| c as usize).collect();
    poly.push(1);
    for d in 1..=e / 2 {
        for code in 0..p.pow(d as u32) {
            let mut divisor: Vec<usize> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
            divisor.push(1);
            if poly_rem(p, &poly, &divisor).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(p: usize, a: &[usize], monic: &[usize]) -> Vec<usize> {
    let mut r = a.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let c = r.pop().unwrap();
        let shift = r.len() - d;
        for i in 0..d {
            r[shift + i] = (r[shift + i] + (p - c) * monic[i]) % p;
        }
    }
    r
}

/// A 1-dimensional subspace of F_q^d, held by its representative with first
/// nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjectivePoint(Vec<FieldElement>);

impl ProjectivePoint {
    /// Normalizes a nonzero vector; returns `None` for the zero vector.
    pub fn from_vector(field: &Field, v: &[FieldElement]) -> Option<ProjectivePoint> {
        let lead = v.iter().copied().find(|c| !c.is_zero())?;
        let scale = field.inv(lead)?;
        Some(ProjectivePoint(v.iter().map(|&c| field.mul(c, scale)).collect()))
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }
}

/// All 1-dimensional subspaces of F_q^d, in increasing order of the
/// base-q index of their normalized representatives (last coordinate most
/// significant).
pub fn projective_points(field: &Field, d: usize) -> Vec<ProjectivePoint> {
    assert!(d >= 1, "dimension must be at least 1");
    let q = field.order();
    let total = q.checked_pow(d as u32).expect("q^d overflows");
    let mut out = Vec::with_capacity((total - 1) / (q - 1));
    for code in 1..total {
        let v: Vec<FieldElement> = (0..d).map(|i| field.element(code / q.pow(i as u32) % q)).collect();
        if v.iter().find(|c| !c.is_zero()) == Some(&FieldElement::ONE) {
            out.push(ProjectivePoint(v));
        }
    }
    out
}

/// Base-q index of a coordinate vector, matching the order of [`projective_points`].
pub fn vector_index(field: &Field, v: &[FieldElement]) -> usize {
    v.iter().rev().fold(0, |acc, c| acc * field.order() + c.index())
}

/// The form `x^t M y` with `M` block diagonal in blocks `[[0, -1], [1, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    dimension: usize,
}

impl SymplecticForm {
    /// Form on F_q^{2r}.
    pub fn new(rank: usize) -> SymplecticForm {
        assert!(rank >= 1);
        SymplecticForm { dimension: 2 * rank }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Entry `M[i][j]` as an integer in {-1, 0, 1}.
    pub fn matrix_entry(&self, i: usize, j: usize) -> i8 {
        if i / 2 != j / 2 {
            0
        } else {
            match (i % 2, j % 2) {
                (0, 1) => -1,
                (1, 0) => 1,
                _ => 0,
            }
        }
    }

    pub fn pair(&self, field: &Field, x: &[FieldElement], y: &[FieldElement]) -> Result<FieldElement, FieldError> {
        if x.len() != self.dimension {
            return Err(FieldError::DimensionMismatch(x.len(), self.dimension));
        }
        if y.len() != self.dimension {
            return Err(FieldError::DimensionMismatch(y.len(), self.dimension));
        }
        let mut acc = FieldElement::ZERO;
        for b in (0..self.dimension).step_by(2) {
            acc = field.sub(acc, field.mul(x[b], y[b + 1]));
            acc = field.add(acc, field.mul(x[b + 1], y[b]));
        }
        Ok(acc)
    }
}
