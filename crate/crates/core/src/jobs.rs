//! The four report-producing jobs behind the command line.

use xsquare_algebra::{Ideal, MonomialOrder, PolyRing, RingHom};

use crate::crossed::{
    functor_m, free_precrossed, peiffer_quotient, simplicial_square, verify_square, verify_xmod, CrossedModuleRep,
    HRule, MObject, Subquotient,
};
use crate::homotopy::compare_xy;
use crate::report::{
    AxiomReport, BuildReport, Check, CompareReport, CornerSummary, HomotopySection, IdealSummary, RingSummary,
    VerifyReport,
};
use crate::simplicial::{
    explicit_peiffer_elements, moore, peiffer_p1, peiffer_p2, s3_free_instances, P2Route, Skeleton2,
};
use crate::tensor_coprod::{assemble_l, compare_corner_with};
use crate::Result;

pub fn order_name(order: MonomialOrder) -> &'static str {
    match order {
        MonomialOrder::Lex => "lex",
        _ => "degrevlex",
    }
}

fn summary(name: &str, ideal: &Ideal) -> Result<IdealSummary> {
    Ok(IdealSummary {
        name: name.to_string(),
        ring: ideal.ring().names().to_vec(),
        basis: ideal.groebner_basis()?.iter().map(|g| g.to_string()).collect(),
    })
}

fn ring_label(r: &PolyRing) -> String {
    format!("k[{}]", r.names().join(", "))
}

fn corner(name: &str, c: &Subquotient) -> Result<CornerSummary> {
    let basis = |i: &Ideal| -> Result<Vec<String>> {
        Ok(i.groebner_basis()?.iter().map(|g| g.to_string()).collect())
    };
    Ok(CornerSummary {
        corner: name.to_string(),
        ring: ring_label(c.ring()),
        numerator: basis(c.numerator())?,
        relations: basis(c.relations())?,
    })
}

/// Rings, Moore ideals, `P1`, `P2` and the crossed square of the skeleton.
pub fn build_report(sk: &Skeleton2) -> Result<BuildReport> {
    let mut ident = Check::new("simplicial identities").with_note("through level 3, on generators");
    for c in sk.check_identities() {
        ident.expect(c.holds, || c.identity.clone());
    }
    let mo = moore(sk)?;
    let (ne1_ok, kbar_ok) = mo.explicit_forms_agree(sk)?;
    let p1 = peiffer_p1(sk)?;
    let p2 = peiffer_p2(sk, &mo, P2Route::CFamilies)?;
    let sq = simplicial_square(sk, &mo, &p2)?;
    let rings = (0..=3)
        .map(|n| {
            let r = sk.ring(n);
            RingSummary { level: n, variables: r.names().to_vec(), weights: r.weights().to_vec() }
        })
        .collect();
    Ok(BuildReport {
        field: sk.data().field.to_string(),
        order: order_name(sk.order()).to_string(),
        rings,
        identities: ident,
        ideals: vec![
            summary("NE1 = Ker d0", &mo.ne1)?,
            summary("Ker d1", &mo.kbar)?,
            summary("NE2", &mo.ne2)?,
            summary("P1", &p1)?,
            summary("P2", &p2)?,
        ],
        explicit_forms: vec![
            Check::from_bool("Ker d0 = (S_i)", ne1_ok, ""),
            Check::from_bool("Ker d1 = (S_i - t_i)", kbar_ok, ""),
        ],
        square: vec![
            corner("L", &sq.l)?,
            corner("M", &sq.m)?,
            corner("Mbar", &sq.n)?,
            corner("E1", &sq.base)?,
        ],
        h_rule: sq.h.describe(),
    })
}

/// `(t) -> R`, the inclusion of the ideal of relations.
pub fn relation_inclusion(sk: &Skeleton2) -> Result<CrossedModuleRep> {
    let r = sk.ring(0);
    let id = RingHom::identity(r);
    let gens: Vec<_> = sk.t().iter().filter(|t| !t.is_zero()).cloned().collect();
    Ok(CrossedModuleRep {
        top: Subquotient::ideal(sk.ideal(0, gens.clone())?),
        base: Subquotient::whole(r, sk.budget()),
        boundary: id.clone(),
        action: id,
        gens,
    })
}

/// Axiom suites for `M(E^(i), n)`, `i, n <= 2`, the free crossed module and
/// the tensor square. `break_h` replaces every pairing by zero.
pub fn verify_report(sk: &Skeleton2, break_h: bool) -> Result<VerifyReport> {
    let mut suites = Vec::new();
    for i in 0..=2 {
        let ski = sk.truncated(i)?;
        suites.push(verify_xmod(&relation_inclusion(&ski)?, &format!("M(E^({i}), 0) as (t) -> R"))?);
        for n in 1..=2 {
            let subject = format!("M(E^({i}), {n})");
            match functor_m(&ski, n)? {
                MObject::XMod(cm) => suites.push(verify_xmod(&cm, &subject)?),
                MObject::Square(sq) => {
                    let sq = if break_h { sq.with_h(HRule::Zero) } else { sq };
                    suites.push(verify_square(&sq, &subject)?);
                }
                MObject::Ring(_) => {}
            }
        }
    }
    suites.push(verify_xmod(&peiffer_quotient(&free_precrossed(sk)?)?, "free crossed module on S2")?);
    let asm = assemble_l(sk)?;
    let tensor = if break_h { asm.tensor.square.clone().with_h(HRule::Zero) } else { asm.tensor.square.clone() };
    suites.push(verify_square(&tensor, "tensor square Ker d0 (x) Ker d1")?);
    Ok(VerifyReport { suites })
}

fn axioms_section(rep: AxiomReport) -> HomotopySection {
    HomotopySection { title: rep.subject, rows: Vec::new(), checks: rep.checks, witnesses: Vec::new() }
}

/// Both constructions of `P2` agree once the explicit list is extended by
/// the S3-free instances.
pub fn p2_routes(sk: &Skeleton2) -> Result<HomotopySection> {
    let mo = moore(sk)?;
    let cf = peiffer_p2(sk, &mo, P2Route::CFamilies)?;
    let mut gens = explicit_peiffer_elements(sk);
    gens.extend(s3_free_instances(sk)?);
    let ex = sk.ideal(2, gens)?;
    Ok(HomotopySection {
        title: "P2 by c-families and by the explicit list".into(),
        rows: Vec::new(),
        checks: vec![Check::from_bool("P2 routes", cf.equals(&ex)?, "ideal equality in E2")],
        witnesses: Vec::new(),
    })
}

/// `M(E^(i), n) = M(E^(i+1), n)` for `i >= n + 1`, as presentation equality.
pub fn stability(sk: &Skeleton2) -> Result<HomotopySection> {
    let mut checks = Vec::new();
    for (n, i) in [(0, 1), (0, 2), (1, 2)] {
        let a = functor_m(&sk.truncated(i)?, n)?;
        let b = functor_m(&sk.truncated(i + 1)?, n)?;
        checks.push(Check::from_bool(
            format!("M(E^({i}), {n}) = M(E^({}), {n})", i + 1),
            a.same_presentation(&b)?,
            "",
        ));
    }
    let a = functor_m(&sk.truncated(1)?, 1)?;
    let b = functor_m(&sk.truncated(2)?, 1)?;
    let same = a.same_presentation(&b)?;
    checks.push(Check::info(
        "M(E^(1), 1) vs M(E^(2), 1)",
        if same { "equal" } else { "differ: S3 adds relations in dimension 1" },
    ));
    Ok(HomotopySection { title: "stability".into(), rows: Vec::new(), checks, witnesses: Vec::new() })
}

/// Corner comparison, tensor axioms, P2 routes, the X/Y comparison and
/// stability.
pub fn compare_report(sk: &Skeleton2, max_degree: u64) -> Result<CompareReport> {
    let mo = moore(sk)?;
    let p2 = peiffer_p2(sk, &mo, P2Route::CFamilies)?;
    let asm = assemble_l(sk)?;
    let mut sections = vec![compare_corner_with(sk, &mo, &p2, max_degree)?];
    sections.push(axioms_section(verify_square(&asm.tensor.square, "tensor square Ker d0 (x) Ker d1")?));
    sections.push(p2_routes(sk)?);
    let mut xy = compare_xy(sk, max_degree)?;
    if sk.n_s3() > 0 {
        xy.checks.push(Check::info("1-skeleton", "S3 dropped: X and Y are defined from the tensor corner"));
    }
    sections.push(xy);
    sections.push(stability(sk)?);
    Ok(CompareReport { max_degree, sections })
}
