//! Exact arithmetic for small finite fields GF(p^k), q = p^k <= 2^16.
//!
//! Elements are canonical indices in 0..q: the element with polynomial
//! coordinates (c_0, ..., c_{k-1}) over GF(p) has index sum(c_i * p^i), so
//! index 0 is zero and index 1 is one. The modulus is the lexicographically
//! least monic irreducible polynomial of degree k (non-leading coefficients
//! read as a base-p integer), which makes every field presentation
//! reproducible across runs.
//!
//! Small fields (q <= 256) get full multiplication/inverse lookup tables;
//! larger ones use log/antilog tables over a canonical primitive element.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Hard cap on field order; the constructions here never need more.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrime(u64),
    #[error("field order {p}^{k} exceeds the supported bound 2^16")]
    OrderTooLarge { p: u64, k: u32 },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("{r} does not divide q - 1 = {qm1}: no primitive {r}-th root of unity")]
    NoRootOfUnity { r: u64, qm1: u64 },
    #[error("modulus polynomial is not monic of degree {0}")]
    BadModulus(u32),
    #[error("modulus polynomial is reducible over GF({0})")]
    ReducibleModulus(u64),
}

/// A concrete presentation of GF(p^k) with arithmetic tables.
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, length k+1, coefficients over GF(p), constant term first.
    modulus: Vec<u32>,
    /// exp[i] = index of zeta^i for the canonical primitive element zeta.
    exp: Vec<u16>,
    /// log[x] = discrete log of index x (log[0] is unused).
    log: Vec<u32>,
    /// Frobenius table: frob[x] = x^p.
    frob: Vec<u16>,
    /// Full q*q tables, only when q <= 256.
    mul_table: Option<Vec<u16>>,
    inv_table: Option<Vec<u16>>,
    add_table: Option<Vec<u16>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)?;
        if self.k > 1 {
            write!(f, " = GF({}^{})", self.p, self.k)?;
        }
        Ok(())
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Polynomial helpers over GF(p), used only while building a field.
// Polynomials are coefficient vectors, constant term first, no trailing zeros.
// ---------------------------------------------------------------------------

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&mut prod, modulus, p);
    prod
}

/// Reduce `a` modulo the monic polynomial `modulus` in place.
fn poly_rem(a: &mut Vec<u32>, modulus: &[u32], p: u32) {
    let deg_m = modulus.len() - 1;
    while a.len() > deg_m {
        let lead = *a.last().unwrap() % p;
        let shift = a.len() - 1 - deg_m;
        if lead != 0 {
            for (i, &mi) in modulus.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + p * p - (lead * mi) % p * 1) % p;
                // note: lead*mi < p*p, the added p*p keeps the subtraction positive
            }
        }
        a.pop();
    }
    poly_trim(a);
}

fn poly_pow_mod(base: &[u32], mut e: u64, modulus: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = base.to_vec();
    poly_rem(&mut b, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul_mod(&result, &b, modulus, p);
        }
        b = poly_mul_mod(&b, &b, modulus, p);
        e >>= 1;
    }
    result
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // a mod b, with b made monic first
        let lead_inv = mod_inverse(*b.last().unwrap(), p);
        let monic: Vec<u32> = b.iter().map(|&c| c * lead_inv % p).collect();
        poly_rem(&mut a, &monic, p);
        std::mem::swap(&mut a, &mut b);
    }
    poly_trim(&mut a);
    a
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is a small prime, exponentiation is fine
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Rabin irreducibility test for a monic polynomial of degree k over GF(p).
fn poly_is_irreducible(f: &[u32], p: u32) -> bool {
    let k = (f.len() - 1) as u32;
    if k == 0 {
        return false;
    }
    let x = vec![0u32, 1];
    // x^(p^k) == x mod f
    let mut xp = x.clone();
    for _ in 0..k {
        xp = poly_pow_mod(&xp, p as u64, f, p);
    }
    let mut diff = xp.clone();
    diff.resize(diff.len().max(2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    // gcd(x^(p^(k/r)) - x, f) == 1 for each prime r | k
    let mut rem = k;
    let mut r = 2;
    let mut prime_divs = Vec::new();
    while r * r <= rem {
        if rem % r == 0 {
            prime_divs.push(r);
            while rem % r == 0 {
                rem /= r;
            }
        }
        r += 1;
    }
    if rem > 1 {
        prime_divs.push(rem);
    }
    for r in prime_divs {
        let mut xq = x.clone();
        for _ in 0..(k / r) {
            xq = poly_pow_mod(&xq, p as u64, f, p);
        }
        let mut diff = xq;
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        if diff.is_empty() {
            // x^(p^(k/r)) == x means f has a factor of degree dividing k/r
            return false;
        }
        let g = poly_gcd(&diff, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

impl FieldSpec {
    /// Build GF(p^k) with the canonical (lexicographically least) modulus.
    pub fn new(p: u64, k: u32) -> Result<Arc<FieldSpec>, FieldError> {
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q.saturating_mul(p);
            if q > MAX_FIELD_ORDER {
                return Err(FieldError::OrderTooLarge { p, k });
            }
        }
        let p = p as u32;
        let modulus = Self::canonical_modulus(p, k);
        Self::with_modulus(p, k, modulus)
    }

    /// Build GF(p^k) from prime-power order q.
    pub fn from_order(q: u64) -> Result<Arc<FieldSpec>, FieldError> {
        let (p, k) = factor_prime_power(q).ok_or(FieldError::NonPrime(q))?;
        Self::new(p, k)
    }

    /// Build with an explicit monic irreducible modulus (constant term first,
    /// length k+1). Used by the JSON generator loader.
    pub fn with_modulus(p: u32, k: u32, modulus: Vec<u32>) -> Result<Arc<FieldSpec>, FieldError> {
        if modulus.len() != k as usize + 1 || modulus[k as usize] % p != 1 {
            return Err(FieldError::BadModulus(k));
        }
        let modulus: Vec<u32> = modulus.iter().map(|&c| c % p).collect();
        if k > 1 && !poly_is_irreducible(&modulus, p) {
            return Err(FieldError::ReducibleModulus(p as u64));
        }
        let q = (p as u64).pow(k) as u32;

        let mut spec = FieldSpec {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: vec![0; q as usize],
            frob: Vec::new(),
            mul_table: None,
            inv_table: None,
            add_table: None,
        };
        spec.build_log_tables();
        spec.build_frobenius();
        if q <= 256 {
            spec.build_dense_tables();
        }
        Ok(Arc::new(spec))
    }

    fn canonical_modulus(p: u32, k: u32) -> Vec<u32> {
        if k == 1 {
            // GF(p) itself: elements mod X
            return vec![0, 1];
        }
        let count = (p as u64).pow(k);
        for code in 0..count {
            let mut f = Vec::with_capacity(k as usize + 1);
            let mut c = code;
            for _ in 0..k {
                f.push((c % p as u64) as u32);
                c /= p as u64;
            }
            f.push(1);
            if poly_is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// Index -> polynomial coordinates over GF(p), constant term first.
    fn coords(&self, x: u16) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.k as usize);
        let mut c = x as u32;
        for _ in 0..self.k {
            v.push(c % self.p);
            c /= self.p;
        }
        v
    }

    fn index_of(&self, coords: &[u32]) -> u16 {
        let mut x: u32 = 0;
        for &c in coords.iter().rev() {
            x = x * self.p + c % self.p;
        }
        x as u16
    }

    /// Multiplication through polynomial arithmetic; bootstrap only.
    fn raw_mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        let pa = self.coords(a);
        let pb = self.coords(b);
        let prod = poly_mul_mod(&pa, &pb, &self.modulus, self.p);
        let mut padded = prod;
        padded.resize(self.k as usize, 0);
        self.index_of(&padded)
    }

    fn build_log_tables(&mut self) {
        let q = self.q;
        // canonical primitive element: least index with multiplicative order q-1
        let mut zeta = 1u16;
        if q > 2 {
            'search: for g in 2..q {
                let g = g as u16;
                let mut e = g;
                let mut ord = 1u32;
                while e != 1 {
                    e = self.raw_mul(e, g);
                    ord += 1;
                    if ord > q {
                        break; // cannot happen in a field, guards table bugs
                    }
                }
                if ord == q - 1 {
                    zeta = g;
                    break 'search;
                }
            }
        }
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut e = 1u16;
        for i in 0..(q - 1) {
            exp.push(e);
            self.log[e as usize] = i;
            e = self.raw_mul(e, zeta);
        }
        debug_assert_eq!(e, 1);
        self.exp = exp;
    }

    fn build_frobenius(&mut self) {
        let q = self.q;
        let mut frob = vec![0u16; q as usize];
        for x in 0..q {
            frob[x as usize] = self.pow_raw(x as u16, self.p as u64);
        }
        self.frob = frob;
    }

    fn pow_raw(&self, x: u16, e: u64) -> u16 {
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let qm1 = (self.q - 1) as u64;
        let e = (self.log[x as usize] as u64 * (e % qm1)) % qm1;
        self.exp[e as usize]
    }

    fn build_dense_tables(&mut self) {
        let q = self.q as usize;
        let mut mul = vec![0u16; q * q];
        let mut add = vec![0u16; q * q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            for b in 0..q {
                mul[a * q + b] = self.mul_slow(a as u16, b as u16);
                add[a * q + b] = self.add_slow(a as u16, b as u16);
            }
        }
        for a in 1..q {
            inv[a] = self.inv_slow(a as u16);
        }
        self.mul_table = Some(mul);
        self.add_table = Some(add);
        self.inv_table = Some(inv);
    }

    fn mul_slow(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        let qm1 = self.q - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % qm1;
        self.exp[e as usize]
    }

    fn add_slow(&self, a: u16, b: u16) -> u16 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut x, mut a, mut b, mut mult) = (0u32, a as u32, b as u32, 1u32);
        for _ in 0..self.k {
            x += (a + b) % self.p * mult;
            a /= self.p;
            b /= self.p;
            mult *= self.p;
        }
        x as u16
    }

    fn inv_slow(&self, a: u16) -> u16 {
        debug_assert_ne!(a, 0, "inverse of zero");
        let qm1 = self.q - 1;
        let e = (qm1 - self.log[a as usize]) % qm1;
        self.exp[e as usize]
    }

    // -- public arithmetic ---------------------------------------------------

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        if let Some(t) = &self.add_table {
            t[a as usize * self.q as usize + b as usize]
        } else {
            self.add_slow(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut a, mut mult) = (0u32, a as u32, 1u32);
        for _ in 0..self.k {
            let d = a % self.p;
            x += if d == 0 { 0 } else { self.p - d } * mult;
            a /= self.p;
            mult *= self.p;
        }
        x as u16
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if let Some(t) = &self.mul_table {
            t[a as usize * self.q as usize + b as usize]
        } else {
            self.mul_slow(a, b)
        }
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        if let Some(t) = &self.inv_table {
            t[a as usize]
        } else {
            self.inv_slow(a)
        }
    }

    pub fn div(&self, a: u16, b: u16) -> u16 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, x: u16, e: u64) -> u16 {
        self.pow_raw(x, e)
    }

    /// Frobenius x -> x^p.
    #[inline]
    pub fn frobenius(&self, x: u16) -> u16 {
        self.frob[x as usize]
    }

    /// Frobenius applied j times: x -> x^(p^j).
    pub fn frobenius_pow(&self, x: u16, j: u32) -> u16 {
        let mut y = x;
        for _ in 0..(j % self.k) {
            y = self.frob[y as usize];
        }
        y
    }

    /// Canonical primitive element (least index of multiplicative order q-1).
    pub fn primitive_element(&self) -> u16 {
        self.exp[if self.q == 2 { 0 } else { 1 }]
    }

    pub fn element_order(&self, x: u16) -> u64 {
        assert_ne!(x, 0, "zero has no multiplicative order");
        let qm1 = (self.q - 1) as u64;
        let l = self.log[x as usize] as u64;
        qm1 / gcd(qm1, l.max(if l == 0 { qm1 } else { l }))
    }

    /// Primitive r-th root of unity omega = zeta^((q-1)/r); requires r | q-1.
    pub fn primitive_root_of_unity(&self, r: u64) -> Result<u16, FieldError> {
        let qm1 = (self.q - 1) as u64;
        if r == 0 || qm1 % r != 0 {
            return Err(FieldError::NoRootOfUnity { r, qm1 });
        }
        Ok(self.exp[(qm1 / r) as usize * if r == qm1 { 0 } else { 1 }
            + if r == qm1 { 1 } else { 0 }])
    }

    /// Lexicographically least (alpha, beta) with alpha^2 + beta^2 = -1.
    pub fn sum_of_squares(&self) -> (u16, u16) {
        let q = self.q;
        // least beta with beta^2 = s, per square s
        let mut least_sqrt: Vec<Option<u16>> = vec![None; q as usize];
        for b in 0..q {
            let s = self.mul(b as u16, b as u16);
            if least_sqrt[s as usize].is_none() {
                least_sqrt[s as usize] = Some(b as u16);
            }
        }
        let minus_one = self.neg(1);
        for a in 0..q {
            let target = self.sub(minus_one, self.mul(a as u16, a as u16));
            if let Some(b) = least_sqrt[target as usize] {
                return (a as u16, b);
            }
        }
        unreachable!("every finite field represents -1 as a sum of two squares")
    }

    /// Does x lie in the subfield GF(p^sub)? Requires sub | k.
    pub fn in_subfield(&self, x: u16, sub: u32) -> bool {
        debug_assert!(sub >= 1 && self.k % sub == 0);
        self.frobenius_pow(x, sub) == x
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Factor q as p^k with p prime, if possible.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut k = 0u32;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

// ---------------------------------------------------------------------------
// Vector packing
// ---------------------------------------------------------------------------

/// Packs vectors of GF(q)^d into integer codes < q^d. The first coordinate is
/// the most significant base-q digit, so Kronecker-positioned factors act on
/// contiguous digit groups and code(a (x) b) = code(a)*q^dim(b) + code(b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VecCodec {
    q: u64,
    dim: u32,
    /// q^i for i = 0..=dim
    pow: Vec<u64>,
    /// (bits per digit, digit mask) when q is a power of two
    shift: Option<(u32, u64)>,
}

impl VecCodec {
    pub fn new(q: u64, dim: u32) -> VecCodec {
        let mut pow = Vec::with_capacity(dim as usize + 1);
        let mut x = 1u64;
        for _ in 0..=dim {
            pow.push(x);
            x = x.checked_mul(q).unwrap_or(u64::MAX);
        }
        let shift = if q.is_power_of_two() {
            Some((q.trailing_zeros(), q - 1))
        } else {
            None
        };
        VecCodec { q, dim, pow, shift }
    }

    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Number of points q^dim.
    pub fn domain_size(&self) -> u64 {
        self.pow[self.dim as usize]
    }

    pub fn pack(&self, digits: &[u16]) -> u64 {
        debug_assert_eq!(digits.len(), self.dim as usize);
        let mut code = 0u64;
        if let Some((bits, _)) = self.shift {
            for &d in digits {
                code = (code << bits) | d as u64;
            }
        } else {
            for &d in digits {
                code = code * self.q + d as u64;
            }
        }
        code
    }

    pub fn unpack(&self, code: u64, out: &mut [u16]) {
        debug_assert_eq!(out.len(), self.dim as usize);
        let mut c = code;
        if let Some((bits, mask)) = self.shift {
            for i in (0..self.dim as usize).rev() {
                out[i] = (c & mask) as u16;
                c >>= bits;
            }
        } else {
            for i in (0..self.dim as usize).rev() {
                out[i] = (c % self.q) as u16;
                c /= self.q;
            }
        }
    }

    pub fn unpack_vec(&self, code: u64) -> Vec<u16> {
        let mut v = vec![0u16; self.dim as usize];
        self.unpack(code, &mut v);
        v
    }

    /// Digit i (0 = most significant / first coordinate).
    #[inline]
    pub fn digit(&self, code: u64, i: u32) -> u16 {
        debug_assert!(i < self.dim);
        if let Some((bits, mask)) = self.shift {
            ((code >> (bits * (self.dim - 1 - i))) & mask) as u16
        } else {
            (code / self.pow[(self.dim - 1 - i) as usize] % self.q) as u16
        }
    }

    /// Extract the sub-code of `width` consecutive digits starting at `start`.
    #[inline]
    pub fn block(&self, code: u64, start: u32, width: u32) -> u64 {
        debug_assert!(start + width <= self.dim);
        let low = (self.dim - start - width) as usize;
        code / self.pow[low] % self.pow[width as usize]
    }

    /// Standard basis vector e_i (1-indexed coordinate i+1 at digit i).
    pub fn basis_code(&self, i: u32) -> u64 {
        self.pow[(self.dim - 1 - i) as usize]
    }
}

/// A vector of GF(q)^d together with its packed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedVector {
    pub field: Arc<FieldSpec>,
    pub dim: u32,
    pub code: u64,
}

impl PackedVector {
    pub fn from_digits(field: Arc<FieldSpec>, digits: &[u16]) -> PackedVector {
        let codec = VecCodec::new(field.q() as u64, digits.len() as u32);
        PackedVector {
            field,
            dim: digits.len() as u32,
            code: codec.pack(digits),
        }
    }

    pub fn digits(&self) -> Vec<u16> {
        VecCodec::new(self.field.q() as u64, self.dim).unpack_vec(self.code)
    }

    /// Tensor product: digits of self followed by digits of other.
    pub fn tensor(&self, other: &PackedVector) -> PackedVector {
        debug_assert_eq!(self.field, other.field);
        let codec = VecCodec::new(self.field.q() as u64, other.dim);
        PackedVector {
            field: Arc::clone(&self.field),
            dim: self.dim + other.dim,
            code: self.code * codec.domain_size() + other.code,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_is_the_standard_presentation() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.q(), 4);
        // modulus x^2 + x + 1, so w = index 2 satisfies w^2 = w + 1 = index 3
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let w = 2u16;
        assert_eq!(f.mul(w, w), 3);
        assert_eq!(f.mul(w, f.mul(w, w)), 1); // w * w^2 = 1
    }

    /// Exhaustive oracle: the 16-entry GF(4) multiplication table must agree
    /// with direct polynomial arithmetic mod (x^2 + x + 1).
    #[test]
    fn gf4_table_matches_polynomial_oracle() {
        let f = FieldSpec::new(2, 2).unwrap();
        let poly_mul = |a: u16, b: u16| -> u16 {
            let (a0, a1) = (a & 1, a >> 1);
            let (b0, b1) = (b & 1, b >> 1);
            let c0 = a0 * b0;
            let c1 = a0 * b1 + a1 * b0;
            let c2 = a1 * b1;
            // x^2 = x + 1
            ((c0 + c2) & 1) | ((((c1 + c2) & 1) as u16) << 1)
        };
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(f.mul(a, b), poly_mul(a, b), "{a} * {b}");
            }
        }
    }

    #[test]
    fn gf5_arithmetic() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.add(2, 3), 0);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.primitive_element(), 2);
    }

    #[test]
    fn gf64_contains_gf4_and_gf8() {
        let f = FieldSpec::new(2, 6).unwrap();
        // subfield GF(2^s) = fixed points of frobenius^s; counts must be 2^s
        for sub in [1u32, 2, 3] {
            let count = (0..64).filter(|&x| f.in_subfield(x as u16, sub)).count();
            assert_eq!(count, 1 << sub, "subfield GF(2^{sub})");
        }
    }

    #[test]
    fn roots_of_unity() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        let w = f7.primitive_root_of_unity(3).unwrap();
        // brute-force order check over GF(7)*
        let mut ord = 1;
        let mut e = w;
        while e != 1 {
            e = f7.mul(e, w);
            ord += 1;
        }
        assert_eq!(ord, 3);

        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(
            f5.primitive_root_of_unity(4).unwrap(),
            f5.primitive_element()
        );

        let f4 = FieldSpec::new(2, 2).unwrap();
        let w = f4.primitive_root_of_unity(3).unwrap();
        let mut ord = 1;
        let mut e = w;
        while e != 1 {
            e = f4.mul(e, w);
            ord += 1;
        }
        assert_eq!(ord, 3);

        assert!(f5.primitive_root_of_unity(3).is_err());
    }

    #[test]
    fn sum_of_squares_examples() {
        // GF(5): exhaustive search says (0, 2) is least with 2^2 = 4 = -1
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.sum_of_squares(), (0, 2));
        for spec in [
            FieldSpec::new(13, 1).unwrap(),
            FieldSpec::new(3, 2).unwrap(),
            FieldSpec::new(5, 1).unwrap(),
        ] {
            let (a, b) = spec.sum_of_squares();
            let lhs = spec.add(spec.mul(a, a), spec.mul(b, b));
            assert_eq!(lhs, spec.neg(1));
            // exhaustive: no lexicographically smaller pair works
            'outer: for aa in 0..spec.q() as u16 {
                for bb in 0..spec.q() as u16 {
                    if (aa, bb) >= (a, b) {
                        break 'outer;
                    }
                    let v = spec.add(spec.mul(aa, aa), spec.mul(bb, bb));
                    assert_ne!(v, spec.neg(1), "smaller pair exists");
                }
            }
        }
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let specs = [
            FieldSpec::new(2, 2).unwrap(),
            FieldSpec::new(5, 1).unwrap(),
            FieldSpec::new(7, 1).unwrap(),
            FieldSpec::new(3, 2).unwrap(),
            FieldSpec::new(2, 6).unwrap(),
            FieldSpec::new(13, 1).unwrap(),
            FieldSpec::new(3, 4).unwrap(),
        ];
        let mut state = 0x12345678u64;
        let mut next = |q: u32| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((state >> 33) % q as u64) as u16
        };
        for f in &specs {
            for _ in 0..200 {
                let (a, b, c) = (next(f.q()), next(f.q()), next(f.q()));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
            }
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism() {
        for f in [
            FieldSpec::new(2, 4).unwrap(),
            FieldSpec::new(3, 3).unwrap(),
            FieldSpec::new(5, 2).unwrap(),
        ] {
            for a in 0..f.q() as u16 {
                for b in 0..f.q() as u16 {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
                }
                assert_eq!(f.frobenius_pow(a, f.k()), a);
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), FieldError::NonPrime(4));
        assert!(matches!(
            FieldSpec::new(2, 17).unwrap_err(),
            FieldError::OrderTooLarge { .. }
        ));
        assert_eq!(FieldSpec::new(2, 0).unwrap_err(), FieldError::ZeroDegree);
    }

    #[test]
    fn codec_round_trip_and_blocks() {
        let codec = VecCodec::new(4, 3);
        assert_eq!(codec.domain_size(), 64);
        for code in 0..64 {
            let v = codec.unpack_vec(code);
            assert_eq!(codec.pack(&v), code);
        }
        // first coordinate is the most significant digit
        assert_eq!(codec.pack(&[1, 0, 0]), 16);
        assert_eq!(codec.basis_code(0), 16);
        assert_eq!(codec.digit(0b10_01_11, 0), 2);
        assert_eq!(codec.block(0b10_01_11, 1, 2), 0b01_11);

        let codec5 = VecCodec::new(5, 3);
        assert_eq!(codec5.pack(&[1, 0, 0]), 25);
        assert_eq!(codec5.block(codec5.pack(&[4, 3, 2]), 0, 2), 5 * 4 + 3);
    }

    #[test]
    fn tensor_code_is_digit_concatenation() {
        let f = FieldSpec::new(5, 1).unwrap();
        let e1 = PackedVector::from_digits(Arc::clone(&f), &[1, 0]);
        let e2 = PackedVector::from_digits(Arc::clone(&f), &[0, 1]);
        let t = e1.tensor(&e2);
        assert_eq!(t.digits(), vec![1, 0, 0, 1]);
        assert_eq!(t.code, e1.code * 25 + e2.code);
    }
}
