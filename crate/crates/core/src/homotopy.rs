//! Homotopy modules of the skeleton, André–Quillen H2 by two routes, the
//! squared and 2-crossed complexes, and the comparison of the big complex
//! `L -> M ⋊ N -> E1` with the small one `L -> M -> R`.

use xsquare_algebra::groebner::ModuleEncoding;
use xsquare_algebra::poly::monomials_of_degree;
use xsquare_algebra::{
    affine_hilbert, hom_kernel, ideal_intersect, syzygies, FreeModuleVector, GradedDims, Ideal, Polynomial, RingHom,
};

use crate::crossed::{simplicial_square, CrossedSquareRep, HRule, Subquotient};
use crate::linalg::{ideal_piece, span_of, Echelon, MonomialIndex, SparseVec};
use crate::report::{Check, DimsRow, HomotopyReport, HomotopySection};
use crate::simplicial::{moore, peiffer_p2, MooreData, P2Route, Skeleton2};
use crate::{CoreError, Result};

fn diff(a: &GradedDims, b: &GradedDims, what: &str) -> Result<GradedDims> {
    a.checked_sub(b).ok_or_else(|| CoreError::Invalid(format!("{what}: inclusion of ideals fails")))
}

fn dims_from(values: Vec<u64>) -> GradedDims {
    GradedDims { max_degree: values.len().saturating_sub(1) as u64, dims: values }
}

/// `π0 = R / (t)`.
#[derive(Clone, Debug)]
pub struct Pi0 {
    pub relations: Ideal,
    pub dims: GradedDims,
    /// `(t) = d1(NE1)`.
    pub matches_boundary_image: bool,
}

pub fn pi0(sk: &Skeleton2, mo: &MooreData, max_degree: u64) -> Result<Pi0> {
    let relations = sk.ideal(0, sk.t().to_vec())?;
    let image = sk.ideal(0, mo.ne1.groebner_basis()?.iter().map(|g| sk.face(1, 1).apply(g)).collect())?;
    Ok(Pi0 {
        dims: affine_hilbert(&relations, max_degree)?,
        matches_boundary_image: relations.equals(&image)?,
        relations,
    })
}

/// `π1` by both routes.
#[derive(Clone, Debug)]
pub struct Pi1 {
    /// `Ker ∂2 / Im ∂3` of the squared complex, by filtered linear algebra.
    pub squared: GradedDims,
    /// `(NE1 ∩ Ker d1) / d2(NE2)` from ideal Hilbert data.
    pub simplicial: GradedDims,
}

pub fn pi1(sk: &Skeleton2, mo: &MooreData, max_degree: u64) -> Result<Pi1> {
    let d2 = sk.face(2, 2);
    let mut squared = Vec::new();
    for e in 0..=max_degree {
        let index = MonomialIndex::upto(sk.ring(1), e);
        let m = ideal_piece(&mo.ne1, e)?;
        let n = ideal_piece(&mo.kbar, e)?;
        let rm = span_of(&index, &m).rank();
        let rn = span_of(&index, &n).rank();
        let both: Vec<Polynomial> = m.iter().chain(&n).cloned().collect();
        let rmn = span_of(&index, &both).rank();
        let images: Vec<Polynomial> = ideal_piece(&mo.ne2, e)?.iter().map(|l| d2.apply(l)).collect();
        let rim = span_of(&index, &images).rank();
        squared.push((rm + rn - rmn - rim) as u64);
    }
    let j = sk.ideal(1, mo.ne2.groebner_basis()?.iter().map(|g| d2.apply(g)).collect())?;
    let k = ideal_intersect(&mo.ne1, &mo.kbar)?;
    let simplicial = diff(&affine_hilbert(&j, max_degree)?, &affine_hilbert(&k, max_degree)?, "pi1")?;
    Ok(Pi1 { squared: dims_from(squared), simplicial })
}

/// `π2 = (NE2 ∩ Ker d2) / P2`, with basis elements of the cycles that are
/// not boundaries as witnesses.
pub fn pi2(sk: &Skeleton2, mo: &MooreData, p2: &Ideal, max_degree: u64) -> Result<(GradedDims, Vec<Polynomial>)> {
    let cycles = ideal_intersect(&mo.ne2, &hom_kernel(sk.face(2, 2), sk.budget())?)?;
    let dims = diff(&affine_hilbert(p2, max_degree)?, &affine_hilbert(&cycles, max_degree)?, "pi2")?;
    let mut witnesses = Vec::new();
    for g in cycles.groebner_basis()? {
        if !p2.contains(g)? {
            witnesses.push(g.clone());
        }
    }
    Ok((dims, witnesses))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H2Route {
    /// `Syz(t) / Koszul` from module Hilbert data.
    Syzygy,
    /// Kernel of `R^n -> R` modulo the Koszul span, by filtered linear algebra.
    Kernel,
}

fn h2_shifts(t: &[Polynomial]) -> Vec<u32> {
    t.iter().map(|p| p.degree().unwrap_or(0).max(1) as u32).collect()
}

fn koszul(t: &[Polynomial]) -> Vec<FreeModuleVector> {
    let n = t.len();
    let ring = t[0].ring();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![ring.zero(); n];
            v[j] = t[i].clone();
            v[i] = -&t[j];
            out.push(FreeModuleVector::new(v));
        }
    }
    out
}

/// André–Quillen `H2(B, B)` for `B = R/(t)`, the `i`-th generator of `R^n`
/// in degree `max(1, deg t_i)`.
pub fn aq_h2(sk: &Skeleton2, route: H2Route, max_degree: u64) -> Result<GradedDims> {
    let t = sk.t();
    if t.is_empty() {
        return Ok(GradedDims::zeros(max_degree));
    }
    let shifts = h2_shifts(t);
    let enc = ModuleEncoding::new(sk.ring(0), &shifts, "e")?;
    match route {
        H2Route::Syzygy => {
            let syz = syzygies(t, sk.budget())?.vectors;
            let s = enc.submodule_ideal(&syz, sk.budget())?;
            let k = enc.submodule_ideal(&koszul(t), sk.budget())?;
            diff(&affine_hilbert(&k, max_degree)?, &affine_hilbert(&s, max_degree)?, "H2")
        }
        H2Route::Kernel => {
            let r = sk.ring(0);
            let kos = koszul(t);
            let mut out = Vec::new();
            for e in 0..=max_degree {
                let module_index = MonomialIndex::upto(&enc.ring, e);
                let base_index = MonomialIndex::upto(r, e);
                let mut images = Echelon::new();
                let mut basis = 0usize;
                let mut kos_span = Echelon::new();
                for (i, ti) in t.iter().enumerate() {
                    let w = u64::from(shifts[i]);
                    if w > e {
                        continue;
                    }
                    for k in 0..=e - w {
                        for m in monomials_of_degree(r.weights(), k) {
                            basis += 1;
                            let one = r.field().one();
                            let img = ti.mul_term(&m, &one);
                            images.insert(base_index.coords(&img).expect("degree within bound"));
                        }
                    }
                }
                for v in &kos {
                    let ev = enc.encode(v)?;
                    let Some(dv) = ev.degree() else { continue };
                    if dv > e {
                        continue;
                    }
                    for k in 0..=e - dv {
                        for m in monomials_of_degree(enc.ring.weights(), k) {
                            if (0..enc.rank).any(|i| m.exponent(r.nvars() + i) > 0) {
                                continue;
                            }
                            let p = ev.mul_term(&m, &enc.ring.field().one());
                            kos_span.insert(module_index.coords(&p).expect("degree within bound"));
                        }
                    }
                }
                out.push((basis - images.rank() - kos_span.rank()) as u64);
            }
            Ok(dims_from(out))
        }
    }
}

/// Syzygies of `(t)` that are not Koszul, rendered as coordinate tuples.
pub fn h2_witnesses(sk: &Skeleton2) -> Result<Vec<String>> {
    let t = sk.t();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let enc = ModuleEncoding::new(sk.ring(0), &h2_shifts(t), "e")?;
    let k = enc.submodule_ideal(&koszul(t), sk.budget())?;
    let mut out = Vec::new();
    for v in syzygies(t, sk.budget())?.vectors {
        if !k.contains(&enc.encode(&v)?)? {
            out.push(v.to_string());
        }
    }
    Ok(out)
}

/// A crossed square with higher terms `C_n`, `n >= 4`, recorded as ranks.
#[derive(Clone, Debug)]
pub struct SquaredComplexRep {
    pub square: CrossedSquareRep,
    pub higher: Vec<usize>,
    /// `base / (μ M + μ' N)`, over which the higher terms are modules.
    pub a: Subquotient,
}

impl SquaredComplexRep {
    /// `∂2 ∂3 = 0` on the generators of `L`, with `∂3 l = (-λ l, λ' l)`.
    pub fn check(&self) -> Result<Check> {
        let sq = &self.square;
        let mut c = Check::new("d2 d3 = 0");
        for l in &sq.l_gens {
            let r = &sq.mup.apply(&sq.d2p.apply(l)) - &sq.mu.apply(&sq.d2.apply(l));
            c.zero(|| format!("l = {l}"), &sq.base.normal_form(&r)?);
        }
        Ok(c)
    }
}

pub fn build_squared_complex(sk: &Skeleton2) -> Result<SquaredComplexRep> {
    let mo = moore(sk)?;
    let p2 = peiffer_p2(sk, &mo, P2Route::CFamilies)?;
    let square = simplicial_square(sk, &mo, &p2)?;
    let a = Subquotient::quotient_ring(mo.ne1.sum(&mo.kbar)?);
    Ok(SquaredComplexRep { square, higher: Vec::new(), a })
}

/// `C2 -> C1 -> C0` with `C0 = R`, `C1 = NE1`, `C2 = NE2 / P2`.
#[derive(Clone, Debug)]
pub struct TwoCrossedComplexRep {
    pub c0: Subquotient,
    pub c1: Subquotient,
    pub c2: Subquotient,
    pub d1: RingHom,
    pub d2: RingHom,
    /// Lifting on generator pairs, taken to be the h-rule of the square.
    pub lifting: HRule,
    pub higher: Vec<usize>,
}

impl TwoCrossedComplexRep {
    pub fn check(&self) -> Result<Check> {
        let mut c = Check::new("d1 d2 = 0").with_note("on generators of C2, and P2 maps to zero");
        for g in self.c2.numerator().groebner_basis()? {
            let img = self.d2.apply(g);
            c.expect(self.c1.numerator().contains(&img)?, || format!("d2({g}) is not in C1"));
            c.zero(|| format!("l = {g}"), &self.d1.apply(&img));
        }
        for g in self.c2.relations().gens() {
            c.zero(|| format!("relation {g}"), &self.d2.apply(g));
        }
        Ok(c)
    }
}

pub fn build_2crossed(sk: &Skeleton2) -> Result<TwoCrossedComplexRep> {
    let mo = moore(sk)?;
    let p2 = peiffer_p2(sk, &mo, P2Route::CFamilies)?;
    let sq = simplicial_square(sk, &mo, &p2)?;
    Ok(TwoCrossedComplexRep {
        c0: Subquotient::whole(sk.ring(0), sk.budget()),
        c1: Subquotient::ideal(mo.ne1.clone()),
        c2: sq.l.clone(),
        d1: sk.face(1, 1).clone(),
        d2: sk.face(2, 2).clone(),
        lifting: sq.h,
        higher: Vec::new(),
    })
}

/// The `π0`, `π1`, `π2` and `H2` sections for the `homotopy` command.
pub fn homotopy_report(sk: &Skeleton2, pi_degree: u64, h2_degree: u64) -> Result<HomotopyReport> {
    let mo = moore(sk)?;
    let p2 = peiffer_p2(sk, &mo, P2Route::CFamilies)?;
    let mut sections = Vec::new();

    let p0 = pi0(sk, &mo, pi_degree)?;
    let basis: Vec<String> = p0.relations.groebner_basis()?.iter().map(|g| g.to_string()).collect();
    sections.push(HomotopySection {
        title: format!("pi_0 = R/({})", if basis.is_empty() { "0".to_string() } else { basis.join(", ") }),
        rows: vec![DimsRow::new("pi_0", &p0.dims)],
        checks: vec![Check::from_bool("pi_0", p0.matches_boundary_image, "(t) = d1(NE1)")],
        witnesses: Vec::new(),
    });

    let p1 = pi1(sk, &mo, pi_degree)?;
    sections.push(HomotopySection {
        title: "pi_1".into(),
        rows: vec![DimsRow::new("squared complex", &p1.squared), DimsRow::new("simplicial", &p1.simplicial)],
        checks: vec![Check::from_bool("pi_1 routes", p1.squared == p1.simplicial, "both routes agree")],
        witnesses: Vec::new(),
    });

    let (d2, w2) = pi2(sk, &mo, &p2, pi_degree)?;
    let mut c2 = Check::new("pi_2 nonnegative").with_note("P2 lies in the 2-cycles");
    c2.expect(d2.is_nondecreasing(), || "filtered dimensions decrease".into());
    sections.push(HomotopySection {
        title: "pi_2".into(),
        rows: vec![DimsRow::new("pi_2", &d2)],
        checks: vec![c2],
        witnesses: w2.iter().map(|w| w.to_string()).collect(),
    });

    let hs = aq_h2(sk, H2Route::Syzygy, h2_degree)?;
    let hk = aq_h2(sk, H2Route::Kernel, h2_degree)?;
    sections.push(HomotopySection {
        title: format!("H2(B, B), degrees 0..={h2_degree}"),
        rows: vec![DimsRow::new("syzygy route", &hs), DimsRow::new("kernel route", &hk)],
        checks: vec![Check::from_bool("H2 routes", hs == hk, "both routes agree")],
        witnesses: h2_witnesses(sk)?,
    });
    Ok(HomotopyReport { max_degree: pi_degree, sections })
}

/// Pairs `(m, n)` in `M ⋊ N`, coordinates in two copies of `E1`.
fn pair_coords(index: &MonomialIndex, a: &Polynomial, b: &Polynomial) -> SparseVec {
    let mut v = index.coords(a).expect("degree within bound");
    let off = index.len();
    v.extend(index.coords(b).expect("degree within bound").into_iter().map(|(i, c)| (i + off, c)));
    v
}

/// `𝕏 = (L -> M ⋊ N -> E1)` against `𝕐 = (L -> M -> R)`: projection and
/// section on generators, the identity-map kernel complex, and `π0..π2` of
/// both by filtered linear algebra. Built on the 1-skeleton.
pub fn compare_xy(sk: &Skeleton2, max_degree: u64) -> Result<HomotopySection> {
    let one = sk.truncated(1)?;
    let sk = &one;
    let mo = moore(sk)?;
    let p2 = peiffer_p2(sk, &mo, P2Route::CFamilies)?;
    let l = Subquotient::new(mo.ne2.clone(), p2.clone())?;
    let (d1, d2) = (sk.face(1, 1), sk.face(2, 2));
    let s0 = sk.degeneracy(0, 0);
    let e1 = sk.ring(1);
    let ms = mo.ne1.groebner_basis()?.to_vec();
    let ns = mo.kbar.groebner_basis()?.to_vec();
    let ls = mo.ne2.groebner_basis()?.to_vec();
    let zero = e1.zero();

    // 𝕏: ∂3 l = (-d2 l, d2 l), ∂2 (m, n) = m + n.  𝕐: d2, d1.
    let x3 = |p: &Polynomial| (-&d2.apply(p), d2.apply(p));
    let x2 = |m: &Polynomial, n: &Polynomial| m + n;
    // φ = (-id, (m, n) -> m, d1), σ = (-id, m -> (m, -bar m), s0)
    let phi1 = |m: &Polynomial, _n: &Polynomial| m.clone();
    let sigma1 = |m: &Polynomial| (m.clone(), -&sk.bar(m));

    let mut checks = Vec::new();
    let mut cx = Check::new("X is a complex");
    for g in &ls {
        let (a, b) = x3(g);
        cx.zero(|| format!("l = {g}"), &x2(&a, &b));
    }
    let mut cy = Check::new("Y is a complex");
    for g in &ls {
        cy.zero(|| format!("l = {g}"), &d1.apply(&d2.apply(g)));
    }
    checks.extend([cx, cy]);

    let mut cphi = Check::new("projection is a chain map");
    for g in &ls {
        let (a, b) = x3(g);
        cphi.zero(|| format!("level 2, l = {g}"), &(&phi1(&a, &b) - &d2.apply(&-g)));
    }
    for m in &ms {
        cphi.zero(|| format!("level 1, m = {m}"), &(&d1.apply(&x2(m, &zero)) - &d1.apply(&phi1(m, &zero))));
    }
    for n in &ns {
        cphi.zero(|| format!("level 1, n = {n}"), &(&d1.apply(&x2(&zero, n)) - &d1.apply(&phi1(&zero, n))));
    }
    let mut csig = Check::new("section is a chain map");
    for g in &ls {
        let (a, b) = sigma1(&d2.apply(g));
        let (c, d) = x3(&-g);
        csig.zero(|| format!("level 2 M-part, l = {g}"), &(&a - &c));
        csig.zero(|| format!("level 2 N-part, l = {g}"), &(&b - &d));
    }
    for m in &ms {
        let (a, b) = sigma1(m);
        csig.zero(|| format!("level 1, m = {m}"), &(&s0.apply(&d1.apply(m)) - &x2(&a, &b)));
    }
    let mut cid = Check::new("projection after section is the identity");
    for g in &ls {
        let back = -&(-g);
        cid.zero(|| format!("level 2, l = {g}"), &l.normal_form(&(&back - g))?);
    }
    for m in &ms {
        let (a, b) = sigma1(m);
        cid.zero(|| format!("level 1, m = {m}"), &(&phi1(&a, &b) - m));
    }
    let e0 = sk.ring(0);
    for v in 0..e0.nvars() {
        let x = e0.var(v);
        cid.zero(|| format!("level 0, {x}"), &(&d1.apply(&s0.apply(&x)) - &x));
    }
    checks.extend([cphi, csig, cid]);

    let kbar_is_kernel = mo.kbar.equals(&hom_kernel(d1, sk.budget())?)?;
    let mut kernel_h = Vec::new();
    let (mut x0, mut x1, mut x2d) = (Vec::new(), Vec::new(), Vec::new());
    let (mut y0, mut y1, mut y2) = (Vec::new(), Vec::new(), Vec::new());
    for e in 0..=max_degree {
        let i1 = MonomialIndex::upto(e1, e);
        let i0 = MonomialIndex::upto(e0, e);
        let m = ideal_piece(&mo.ne1, e)?;
        let n = ideal_piece(&mo.kbar, e)?;
        let ne2 = ideal_piece(&mo.ne2, e)?;
        let p2_dim = span_of(&MonomialIndex::upto(sk.ring(2), e), &ideal_piece(&p2, e)?).rank();
        let ne2_dim = span_of(&MonomialIndex::upto(sk.ring(2), e), &ne2).rank();

        // kernel complex N -> N, the identity
        let n_dim = span_of(&i1, &n).rank();
        let img: Vec<Polynomial> = n.iter().map(|q| x2(&zero, q)).collect();
        let r = span_of(&i1, &img).rank();
        kernel_h.push(((n_dim - r) + (n_dim - r)) as u64);

        // 𝕏
        let mn: Vec<SparseVec> = m
            .iter()
            .map(|a| pair_coords(&i1, a, &zero))
            .chain(n.iter().map(|b| pair_coords(&i1, &zero, b)))
            .collect();
        let dim_mn = Echelon::spanned_by(mn).rank();
        let sums: Vec<Polynomial> = m.iter().chain(&n).cloned().collect();
        let r2 = span_of(&i1, &sums).rank();
        let b3: Vec<SparseVec> = ne2
            .iter()
            .map(|g| {
                let (a, b) = x3(g);
                pair_coords(&i1, &a, &b)
            })
            .collect();
        let r3 = Echelon::spanned_by(b3).rank();
        x0.push((i1.len() - r2) as u64);
        x1.push((dim_mn - r2 - r3) as u64);
        x2d.push((ne2_dim - r3 - p2_dim) as u64);

        // 𝕐
        let m_dim = span_of(&i1, &m).rank();
        let dm: Vec<Polynomial> = m.iter().map(|a| d1.apply(a)).collect();
        let r1y = span_of(&i0, &dm).rank();
        let dl: Vec<Polynomial> = ne2.iter().map(|g| d2.apply(g)).collect();
        let r2y = span_of(&i1, &dl).rank();
        y0.push((i0.len() - r1y) as u64);
        y1.push((m_dim - r1y - r2y) as u64);
        y2.push((ne2_dim - r2y - p2_dim) as u64);
    }
    let kernel = dims_from(kernel_h);
    checks.push(Check::from_bool(
        "kernel complex",
        kbar_is_kernel && kernel.is_zero(),
        "the kernel of the projection is N -> N, with zero homology",
    ));
    let (x0, x1, x2d, y0, y1, y2) = (dims_from(x0), dims_from(x1), dims_from(x2d), dims_from(y0), dims_from(y1), dims_from(y2));
    checks.push(Check::from_bool("pi_0", x0 == y0, "X and Y agree"));
    checks.push(Check::from_bool("pi_1", x1 == y1, "X and Y agree"));
    checks.push(Check::from_bool("pi_2", x2d == y2, "X and Y agree"));
    let rows = vec![
        DimsRow::new("kernel homology", &kernel),
        DimsRow::new("pi_0 X", &x0),
        DimsRow::new("pi_0 Y", &y0),
        DimsRow::new("pi_1 X", &x1),
        DimsRow::new("pi_1 Y", &y1),
        DimsRow::new("pi_2 X", &x2d),
        DimsRow::new("pi_2 Y", &y2),
    ];
    Ok(HomotopySection { title: "split epimorphism X -> Y on the 1-skeleton".into(), rows, checks, witnesses: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::ConstructionData;
    use xsquare_algebra::{MonomialOrder, DEFAULT_BUDGET};

    fn sk(json: &str) -> Skeleton2 {
        Skeleton2::build(&ConstructionData::from_json(json).unwrap(), MonomialOrder::DegRevLex, DEFAULT_BUDGET)
            .unwrap()
    }

    const A: &str = r#"{"field":"Q","S1":["x"],"S2":[{"name":"S","image":"x^2"}]}"#;
    const B: &str =
        r#"{"field":"Q","S1":["x","y"],"S2":[{"name":"S1","image":"x^2"},{"name":"S2","image":"x*y"}]}"#;

    #[test]
    fn pi0_of_a() {
        let s = sk(A);
        let p = pi0(&s, &moore(&s).unwrap(), 4).unwrap();
        assert!(p.matches_boundary_image);
        assert_eq!(p.dims.dims, [1, 2, 2, 2, 2]);
    }

    #[test]
    fn h2_routes() {
        let s = sk(A);
        assert!(aq_h2(&s, H2Route::Syzygy, 8).unwrap().is_zero());
        assert!(aq_h2(&s, H2Route::Kernel, 8).unwrap().is_zero());
        let s = sk(B);
        let a = aq_h2(&s, H2Route::Syzygy, 6).unwrap();
        assert_eq!(a.dims, [0, 0, 0, 1, 2, 3, 4]);
        assert_eq!(a, aq_h2(&s, H2Route::Kernel, 6).unwrap());
        assert_eq!(h2_witnesses(&s).unwrap(), ["(y, -x)"]);
    }

    #[test]
    fn pi1_routes_agree_on_b() {
        let s = sk(B);
        let p = pi1(&s, &moore(&s).unwrap(), 5).unwrap();
        assert_eq!(p.squared, p.simplicial);
    }

    #[test]
    fn complexes_of_a() {
        let s = sk(A);
        let sq = build_squared_complex(&s).unwrap();
        assert!(sq.higher.is_empty());
        assert!(sq.check().unwrap().passed());
        let tc = build_2crossed(&s).unwrap();
        assert!(tc.check().unwrap().passed());
    }

    #[test]
    fn xy_of_a() {
        let sec = compare_xy(&sk(A), 5).unwrap();
        for c in &sec.checks {
            assert!(c.passed(), "{c}");
        }
    }
}
