//! Dense polynomials over a prime field, little-endian coefficient vectors.
//!
//! Only what the field module needs: reduction modulo a monic polynomial,
//! gcd, and the Ben-Or irreducibility test used to pick the modulus.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    pow_mod_p(a, p - 2, p)
}

pub(crate) fn pow_mod_p(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo `f` (any nonzero `f`).
pub(crate) fn rem(a: &Poly, f: &Poly, p: u64) -> Poly {
    let mut r = a.clone();
    trim(&mut r);
    let mut f = f.clone();
    trim(&mut f);
    let df = f.len() - 1;
    let lead_inv = inv_mod_p(f[df], p);
    while r.len() > df {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        if c != 0 {
            for (i, &fi) in f.iter().enumerate() {
                let idx = top - df + i;
                r[idx] = (r[idx] + p - c * fi % p) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_mod(a: &Poly, b: &Poly, f: &Poly, p: u64) -> Poly {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn pow_mod(base: &Poly, mut exp: u64, f: &Poly, p: u64) -> Poly {
    let mut acc = rem(&vec![1], f, p);
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or: a monic `f` of degree `m` is irreducible iff
/// gcd(f, x^(p^i) - x) = 1 for every 1 <= i <= m/2.
pub(crate) fn is_irreducible(f: &Poly, p: u64) -> bool {
    let m = f.len() - 1;
    if m == 0 {
        return false;
    }
    let x: Poly = vec![0, 1];
    let mut frob = rem(&x, f, p);
    for _ in 0..m / 2 {
        frob = pow_mod(&frob, p, f, p);
        let g = gcd(f, &sub(&frob, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_quadratics_over_f3() {
        // x^2 + 1, x^2 + x + 2, x^2 + 2x + 2 are the irreducible monic quadratics.
        let mut found = Vec::new();
        for b in 0..3 {
            for a in 0..3 {
                if is_irreducible(&vec![b, a, 1], 3) {
                    found.push((a, b));
                }
            }
        }
        found.sort();
        assert_eq!(found, vec![(0, 1), (1, 2), (2, 2)]);
    }

    #[test]
    fn reducible_quartic_without_roots() {
        // (x^2 + 1)^2 over F_3 has no roots but is reducible.
        let f = mul(&vec![1, 0, 1], &vec![1, 0, 1], 3);
        assert!(!is_irreducible(&f, 3));
    }
}
