//! Bivariate gcd over a field.
//!
//! Polynomials are viewed as elements of `K[x][y]`. The content in `K[x]` is
//! handled with the univariate Euclidean algorithm; the primitive parts by
//! evaluation at integer `x` and interpolation, falling back to the
//! primitive pseudo-remainder sequence.

use super::modular;
use super::poly::{Monomial, MultiPoly, Var};
use super::univariate::UniPoly;
use crate::scalar::ExactField;

/// `K[x][y]` element: `coeffs[j]` multiplies `y^j`.
type Rec<K> = Vec<UniPoly<K>>;

fn to_rec<K: ExactField>(p: &MultiPoly<K>) -> Rec<K> {
    let n = p.degree_in(Var::Y).map(|d| d as usize + 1).unwrap_or(0);
    let mut dense: Vec<Vec<K>> = vec![Vec::new(); n];
    for (m, c) in p.terms() {
        let row = &mut dense[m.y as usize];
        if row.len() <= m.x as usize {
            row.resize(m.x as usize + 1, K::zero());
        }
        row[m.x as usize] = c.clone();
    }
    dense.into_iter().map(UniPoly::new).collect()
}

fn from_rec<K: ExactField>(r: &Rec<K>) -> MultiPoly<K> {
    let mut out = MultiPoly::zero();
    for (j, c) in r.iter().enumerate() {
        for (i, a) in c.coeffs().iter().enumerate() {
            out.add_term(Monomial::new(i as u32, j as u32), a.clone());
        }
    }
    out
}

fn trim<K: ExactField>(mut r: Rec<K>) -> Rec<K> {
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

fn content<K: ExactField>(r: &Rec<K>) -> UniPoly<K> {
    let mut g = UniPoly::zero();
    for c in r {
        g = g.gcd(c);
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

fn div_content<K: ExactField>(r: &Rec<K>, c: &UniPoly<K>) -> Rec<K> {
    r.iter().map(|a| a.exact_div(c).expect("content divides every coefficient")).collect()
}

fn primitive_part<K: ExactField>(r: &Rec<K>) -> Rec<K> {
    let c = content(r);
    if c.is_zero() {
        return r.clone();
    }
    div_content(r, &c)
}

/// Pseudo-remainder of `a` by `b` in `y`.
fn prem<K: ExactField>(a: &Rec<K>, b: &Rec<K>) -> Rec<K> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        // r ← lb·r − lr·y^shift·b
        let mut next: Rec<K> = r.iter().map(|c| c.mul(&lb)).collect();
        for (j, bc) in b.iter().enumerate() {
            next[j + shift] = next[j + shift].sub(&bc.mul(&lr));
        }
        r = trim(next);
    }
    r
}

fn eval_rec<K: ExactField>(r: &Rec<K>, x0: &K) -> UniPoly<K> {
    UniPoly::new(r.iter().map(|c| c.eval(x0)).collect())
}

fn x_degree<K: ExactField>(r: &Rec<K>) -> usize {
    r.iter().filter_map(UniPoly::degree).max().unwrap_or(0)
}

/// Newton interpolation through `(nodes[k], values[k])`.
fn interpolate<K: ExactField>(nodes: &[K], values: &[K]) -> UniPoly<K> {
    let n = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (dd[k].clone() - dd[k - 1].clone()) / (nodes[k].clone() - nodes[k - level].clone());
        }
    }
    let mut acc = UniPoly::constant(dd[n - 1].clone());
    for k in (0..n - 1).rev() {
        acc = acc.mul(&UniPoly::linear_root(nodes[k].clone())).add(&UniPoly::constant(dd[k].clone()));
    }
    acc
}

fn divides<K: ExactField>(d: &Rec<K>, p: &Rec<K>) -> bool {
    from_rec(p).exact_div(&from_rec(d)).is_some()
}

/// Gcd of primitive `p`, `q` with positive `y`-degree, by specializing `x`
/// at integers and interpolating the gcd scaled to have leading coefficient
/// `γ = gcd(lc p, lc q)`. Specializations of too high degree are discarded;
/// `None` when no certified answer is found within the point budget.
fn gcd_by_evaluation<K: ExactField>(p: &Rec<K>, q: &Rec<K>) -> Option<Rec<K>> {
    let (lp, lq) = (p.last().expect("nonempty"), q.last().expect("nonempty"));
    let gamma = lp.gcd(lq);
    let bound = gamma.degree().unwrap_or(0) + x_degree(p).min(x_degree(q));
    let mut best = usize::MAX;
    let mut nodes: Vec<K> = Vec::new();
    let mut images: Vec<UniPoly<K>> = Vec::new();
    for step in 0..(2 * bound + 40) as i64 {
        let n = if step % 2 == 0 { step / 2 } else { -(step + 1) / 2 };
        let x0 = K::from_ratio(n, 1);
        if lp.eval(&x0).is_zero() || lq.eval(&x0).is_zero() {
            continue;
        }
        let g = eval_rec(p, &x0).gcd(&eval_rec(q, &x0));
        let d = g.degree().expect("nonzero specializations");
        if d == 0 {
            return Some(vec![UniPoly::one()]);
        }
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            nodes.clear();
            images.clear();
        }
        images.push(g.scale(&gamma.eval(&x0)));
        nodes.push(x0);
        if nodes.len() > bound {
            let cand: Rec<K> = (0..=d)
                .map(|j| interpolate(&nodes, &images.iter().map(|g| g.coeff(j)).collect::<Vec<_>>()))
                .collect();
            let cand = primitive_part(&trim(cand));
            if divides(&cand, p) && divides(&cand, q) {
                return Some(cand);
            }
        }
    }
    None
}

/// True when some specialization `x = x₀` with nonvanishing leading
/// coefficients has coprime images modulo `P`, which forces the gcd of
/// `p` and `q` to be free of `y`.
fn coprime_mod_p<K: ExactField>(p: &Rec<K>, q: &Rec<K>) -> bool {
    let image = |r: &Rec<K>, x0: &K| eval_rec(r, x0).modular_image();
    for n in 1..=3 {
        let x0 = K::from_ratio(n * 7 + 3, 1);
        if let (Some(a), Some(b)) = (image(p, &x0), image(q, &x0)) {
            return modular::gcd_degree(&a, &b) == 0;
        }
    }
    false
}

/// Primitive pseudo-remainder sequence; the slow but unconditional route.
fn gcd_by_prs<K: ExactField>(mut p: Rec<K>, mut q: Rec<K>) -> Rec<K> {
    while q.len() > 1 {
        let r = prem(&p, &q);
        p = q;
        q = if r.is_empty() { r } else { primitive_part(&r) };
    }
    if q.is_empty() {
        p
    } else {
        // q is a nonzero element of K[x]; the y-part of the gcd is trivial.
        vec![UniPoly::one()]
    }
}

/// Monic gcd of two bivariate polynomials (leading graded-lex coefficient 1).
/// `gcd(0, 0) = 0`.
pub fn poly_gcd<K: ExactField>(a: &MultiPoly<K>, b: &MultiPoly<K>) -> MultiPoly<K> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let ra = to_rec(a);
    let rb = to_rec(b);
    let ca = content(&ra);
    let cb = content(&rb);
    let cont = ca.gcd(&cb);
    let mut p = div_content(&ra, &ca);
    let mut q = div_content(&rb, &cb);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g_y = if q.len() <= 1 || coprime_mod_p(&p, &q) {
        vec![UniPoly::one()]
    } else {
        gcd_by_evaluation(&p, &q).unwrap_or_else(|| gcd_by_prs(p, q))
    };
    let full = &from_rec(&g_y) * &cont.to_multi(Var::X);
    full.monic()
}

/// `a · b / gcd(a, b)`, monic.
pub fn poly_lcm<K: ExactField>(a: &MultiPoly<K>, b: &MultiPoly<K>) -> MultiPoly<K> {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero();
    }
    let g = poly_gcd(a, b);
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as G;

    type P = MultiPoly<G>;

    #[test]
    fn gcd_of_products() {
        let x = P::x();
        let y = P::y();
        let one = P::one();
        let f = &(&x + &y) * &(&(&x * &y) - &one);
        let g = &(&x + &y) * &(&x - &(&y * &y));
        assert_eq!(poly_gcd(&f, &g), &x + &y);
        assert_eq!(poly_gcd(&x, &y), one);
    }

    #[test]
    fn gcd_with_x_content() {
        let x = P::x();
        let y = P::y();
        let f = &(&x * &x) * &y;
        let g = &x * &(&y + &P::one());
        assert_eq!(poly_gcd(&f, &g), x);
    }

    #[test]
    fn gcd_gaussian_coefficients() {
        let x = P::x();
        let y = P::y();
        let i = P::constant(G::i());
        let common = &(&x * &i) + &y;
        let f = &common * &(&x + &P::one());
        let g = &common * &(&y - &P::constant(G::int(3)));
        assert_eq!(poly_gcd(&f, &g), common.monic());
    }
}
