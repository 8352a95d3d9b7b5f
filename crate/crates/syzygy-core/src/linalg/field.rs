//! Finite fields F_{p^e} with p prime and 1 <= e <= 8.
//!
//! Elements are `u64` indices in `[0, p^e)`. For e = 1 the index is the
//! residue; for e > 1 its base-p digits are the coefficients of a polynomial
//! in the generator, little-endian (digit i = coefficient of x^i). The
//! modulus is the lexicographically least monic irreducible of degree e,
//! found once by a deterministic Rabin test, so the encoding of every
//! element is fixed for a given (p, e).

use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_EXT_DEGREE: usize = 8;

const MAX_PRIME: u64 = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not a prime in [2, 2^20)")]
    BadCharacteristic(u64),
    #[error("extension degree {0} outside 1..={MAX_EXT_DEGREE}")]
    BadDegree(u32),
    #[error("field order p^e overflows the element encoding")]
    OrderOverflow,
}

/// A finite field descriptor. `Copy`, so matrices can carry it by value.
///
/// `modulus[i]` is the coefficient of x^i of the defining polynomial
/// (degree e, monic); for e = 1 it is unused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u64,
    e: u32,
    order: u64,
    modulus: [u64; MAX_EXT_DEGREE + 1],
}

impl Field {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::extension(p, 1)
    }

    /// The field F_{p^e}. For e > 1 this searches for the canonical
    /// (lexicographically least monic) irreducible polynomial of degree e.
    pub fn extension(p: u64, e: u32) -> Result<Field, FieldError> {
        if p < 2 || p >= MAX_PRIME || !is_prime(p) {
            return Err(FieldError::BadCharacteristic(p));
        }
        if e == 0 || e as usize > MAX_EXT_DEGREE {
            return Err(FieldError::BadDegree(e));
        }
        let mut order: u64 = 1;
        for _ in 0..e {
            order = order.checked_mul(p).ok_or(FieldError::OrderOverflow)?;
            if order >= (1 << 62) {
                return Err(FieldError::OrderOverflow);
            }
        }
        let mut modulus = [0u64; MAX_EXT_DEGREE + 1];
        if e > 1 {
            let poly = least_irreducible(p, e as usize);
            modulus[..poly.len()].copy_from_slice(&poly);
        }
        Ok(Field { p, e, order, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn is_valid(&self, a: u64) -> bool {
        a < self.order
    }

    /// All field elements, 0 first then 1.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order
    }

    fn digits(&self, a: u64) -> [u64; MAX_EXT_DEGREE] {
        let mut d = [0u64; MAX_EXT_DEGREE];
        let mut a = a;
        for x in d.iter_mut().take(self.e as usize) {
            *x = a % self.p;
            a /= self.p;
        }
        d
    }

    fn pack(&self, d: &[u64]) -> u64 {
        let mut a = 0u64;
        for i in (0..self.e as usize).rev() {
            a = a * self.p + d[i] % self.p;
        }
        a
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut d = [0u64; MAX_EXT_DEGREE];
        for i in 0..self.e as usize {
            d[i] = (da[i] + db[i]) % self.p;
        }
        self.pack(&d)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.e == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let da = self.digits(a);
        let mut d = [0u64; MAX_EXT_DEGREE];
        for i in 0..self.e as usize {
            d[i] = (self.p - da[i]) % self.p;
        }
        self.pack(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return a * b % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let e = self.e as usize;
        // Schoolbook product; coefficients stay < e * p^2 < 2^63.
        let mut prod = [0u64; 2 * MAX_EXT_DEGREE];
        for i in 0..e {
            if da[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] += da[i] * db[j];
            }
        }
        for x in prod.iter_mut() {
            *x %= self.p;
        }
        // Reduce modulo the defining polynomial: x^e = -(lower part).
        for i in (e..2 * e - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..e {
                let m = self.modulus[j];
                if m != 0 {
                    // subtract c * m * x^(i-e+j)
                    let t = c * m % self.p;
                    let idx = i - e + j;
                    prod[idx] = (prod[idx] + self.p - t) % self.p;
                }
            }
        }
        self.pack(&prod[..e])
    }

    pub fn pow(&self, a: u64, mut n: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0 && self.is_valid(a), "inverse of zero or invalid element");
        // a^(q-2) = a^(-1) in F_q.
        self.pow(a, self.order - 2)
    }

    /// Embed a residue of the prime subfield as a constant polynomial.
    /// For prime fields this is the identity on valid elements.
    pub fn from_prime_subfield(&self, residue: u64) -> u64 {
        residue % self.p
    }
}

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

/// Polynomial arithmetic helpers over F_p for the irreducibility search.
/// Polynomials are little-endian coefficient vectors without a fixed degree.
mod poly {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = mod_inv(m[dm], p);
        while r.len() > dm {
            let dr = r.len() - 1;
            let c = r[dr] * lead_inv % p;
            for (j, &mj) in m.iter().enumerate() {
                let idx = dr - dm + j;
                r[idx] = (r[idx] + p - c * mj % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % p;
            }
        }
        rem(&prod, m, p)
    }

    pub fn pow_x_mod(exp: u64, m: &[u64], p: u64) -> Vec<u64> {
        // x^exp mod m by square-and-multiply.
        let mut acc = vec![1u64];
        let mut base = rem(&[0, 1], m, p);
        let mut n = exp;
        while n > 0 {
            if n & 1 == 1 {
                acc = mul_mod(&acc, &base, m, p);
            }
            base = mul_mod(&base, &base, m, p);
            n >>= 1;
        }
        acc
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &monicize(&b, p), p);
            a = b;
            b = r;
        }
        a
    }

    pub fn monicize(a: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        trim(&mut a);
        if let Some(&lead) = a.last() {
            let inv = mod_inv(lead, p);
            for c in a.iter_mut() {
                *c = *c * inv % p;
            }
        }
        a
    }

    fn mod_inv(a: u64, p: u64) -> u64 {
        // p is prime and small; Fermat.
        let mut acc = 1u64;
        let mut base = a % p;
        let mut n = p - 2;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            n >>= 1;
        }
        acc
    }
}

/// Rabin irreducibility test: f (monic, degree e) is irreducible over F_p iff
/// x^(p^e) == x mod f and gcd(x^(p^(e/r)) - x, f) = 1 for every prime r | e.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = (f.len() - 1) as u64;
    let q_top = p.pow(e as u32);
    let xq = poly::pow_x_mod(q_top, f, p);
    // x^(p^e) - x must be 0 mod f.
    let mut diff = xq;
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    poly::trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    let mut primes = vec![];
    let mut m = e;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for r in primes {
        let q_sub = p.pow((e / r) as u32);
        let mut g = poly::pow_x_mod(q_sub, f, p);
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = (g[1] + p - 1) % p;
        poly::trim(&mut g);
        let gcd = poly::gcd(f, &g, p);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree e over F_p, ordering
/// candidates by their constant-first digit string. Deterministic, so the
/// element encoding of F_{p^e} is a fixed function of (p, e).
fn least_irreducible(p: u64, e: usize) -> Vec<u64> {
    let total = p.pow(e as u32);
    for idx in 0..total {
        let mut f = vec![0u64; e + 1];
        let mut a = idx;
        for c in f.iter_mut().take(e) {
            *c = a % p;
            a /= p;
        }
        f[e] = 1;
        if f[0] == 0 {
            continue; // reducible: divisible by x
        }
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible of every degree exists over F_p");
}
