//! Multivariate polynomial gcd over the integers.
//!
//! Recursive content/primitive-part scheme: strip monomial and integer
//! content, eliminate symbols that occur in only one argument, then run a
//! subresultant PRS in one main symbol over the ring of the remaining ones.
//! A modular image gcd in the main symbol proves coprimality (the common case)
//! without running the PRS at all.

use num_integer::Integer;

use super::poly::{addmod, mulmod, powmod, Mono, Poly, Symbol, NVARS};

const PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

/// Greatest common divisor with positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().sign_normalized();
    }
    if b.is_zero() {
        return a.clone().sign_normalized();
    }
    if a == b {
        return a.clone().sign_normalized();
    }
    let ma = a.min_mono();
    let mb = b.min_mono();
    let mut m: Mono = [0; NVARS];
    for i in 0..NVARS {
        m[i] = ma[i].min(mb[i]);
    }
    let a1 = a.div_mono(&ma);
    let b1 = b.div_mono(&mb);
    let ca = a1.content();
    let cb = b1.content();
    let g_int = ca.gcd(&cb);
    let a2 = a1.div_int(&ca);
    let b2 = b1.div_int(&cb);
    gcd_primitive(&a2, &b2)
        .scale(&g_int)
        .mul_mono(&m)
        .sign_normalized()
}

/// Both arguments nonzero, integer-primitive and free of monomial content.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b || *a == -b {
        return a.clone().sign_normalized();
    }
    let va = a.var_mask();
    let vb = b.var_mask();
    if va & vb == 0 {
        return Poly::one();
    }
    if let Some(x) = first_symbol(va & !vb) {
        let c = content_in(a, x);
        return gcd(&c, b);
    }
    if let Some(x) = first_symbol(vb & !va) {
        let c = content_in(b, x);
        return gcd(a, &c);
    }

    let x = Symbol::ALL
        .iter()
        .copied()
        .filter(|s| va & (1 << s.index()) != 0)
        .min_by_key(|&s| (a.degree_in(s).max(b.degree_in(s)), s.index()))
        .expect("shared symbol");

    let ac = a.coeffs_in(x);
    let bc = b.coeffs_in(x);
    let cont_a = content_of(&ac);
    let cont_b = content_of(&bc);
    let gc = gcd(&cont_a, &cont_b);
    let ppa = divide_coeffs(ac, &cont_a);
    let ppb = divide_coeffs(bc, &cont_b);

    if let Some(d) = modular_gcd_degree(&ppa, &ppb) {
        if d == 0 {
            return gc;
        }
        let pa = Poly::from_coeffs_in(x, &ppa);
        let pb = Poly::from_coeffs_in(x, &ppb);
        if d + 1 == ppb.len() && pa.div_exact(&pb).is_some() {
            return (&pb * &gc).sign_normalized();
        }
        if d + 1 == ppa.len() && pb.div_exact(&pa).is_some() {
            return (&pa * &gc).sign_normalized();
        }
    }

    let g = subresultant_gcd(ppa, ppb);
    (&Poly::from_coeffs_in(x, &g) * &gc).sign_normalized()
}

fn first_symbol(mask: u8) -> Option<Symbol> {
    Symbol::ALL
        .iter()
        .copied()
        .find(|s| mask & (1 << s.index()) != 0)
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `x`.
pub fn content_in(p: &Poly, x: Symbol) -> Poly {
    content_of(&p.coeffs_in(x))
}

fn content_of(coeffs: &[Poly]) -> Poly {
    let mut nonzero: Vec<&Poly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.nterms());
    let mut g = Poly::zero();
    for c in nonzero {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_coeffs(coeffs: Vec<Poly>, d: &Poly) -> Vec<Poly> {
    if d.is_one() {
        return coeffs;
    }
    coeffs
        .into_iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(v: &mut Vec<Poly>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.len() == 1 && v[0].is_zero() {
        v.clear();
    }
}

/// `lc(b)^{deg a - deg b + 1} · a  mod  b` in the main variable.
fn pseudo_remainder(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    let mut e = a.len() as isize - b.len() as isize + 1;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<Poly> = r.iter().map(|c| c * lb).collect();
        for (k, bk) in b.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            next[k + shift] = &next[k + shift] - &(bk * &lr);
        }
        trim(&mut next);
        r = next;
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lb.pow(e as usize);
        r = r.iter().map(|c| c * &f).collect();
    }
    r
}

/// Subresultant PRS on polynomials primitive in the main variable; returns the
/// primitive gcd as a coefficient vector.
fn subresultant_gcd(a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = a.len() - b.len();
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![Poly::one()];
        }
        let divisor = &g * &h.pow(delta);
        let r: Vec<Poly> = r
            .into_iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        a = std::mem::replace(&mut b, r);
        g = a.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact"),
        };
    }
    let cont = content_of(&b);
    divide_coeffs(b, &cont)
}

/// Degree of the gcd of modular images at a random-looking point, or `None`
/// when no point preserving both leading coefficients was found. An upper
/// bound on the true degree of the gcd of primitive inputs.
fn modular_gcd_degree(a: &[Poly], b: &[Poly]) -> Option<usize> {
    let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..3 {
        let mut point = [0u64; NVARS];
        for v in point.iter_mut() {
            seed = seed
                .wrapping_mul(6_364_136_223_846_793_005)
                .wrapping_add(1_442_695_040_888_963_407);
            *v = (seed >> 3) % PRIME;
        }
        let ia: Vec<u64> = a.iter().map(|c| c.eval_mod(&point, PRIME)).collect();
        let ib: Vec<u64> = b.iter().map(|c| c.eval_mod(&point, PRIME)).collect();
        if ia.last() == Some(&0) || ib.last() == Some(&0) {
            continue;
        }
        return Some(gcd_mod_degree(ia, ib));
    }
    None
}

fn gcd_mod_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let p = PRIME;
    let strip = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    strip(&mut a);
    strip(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !a.is_empty() {
            let f = mulmod(*a.last().unwrap(), inv, p);
            let shift = a.len() - b.len();
            for (k, &bk) in b.iter().enumerate() {
                a[k + shift] = addmod(a[k + shift], p - mulmod(f, bk, p), p);
            }
            strip(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}
