//! Tensor product and coproduct of crossed modules, the assembly of the top
//! corner from `M ⊗ M̄` and the free crossed module on S3, and the map `Φ`
//! from that assembly onto `NE2 / P2`.

use xsquare_algebra::groebner::HomGraph;
use xsquare_algebra::{affine_hilbert, syzygies, GradedDims, Ideal, PolyRing, Polynomial, RingHom};

use crate::crossed::{
    free_crossed_on, verify_square, CrossedModuleRep, CrossedSquareRep, HRule, Subquotient,
};
use crate::report::{Check, DimsRow, HomotopySection};
use crate::simplicial::{moore, peiffer_p2, MooreData, P2Route, Skeleton2};
use crate::{CoreError, Result};

/// `M ⊗ N` for ideal-type crossed modules over a common base `B`: the ring
/// `B[g_pq]` with `g_pq = m_p ⊗ n_q`, modulo syzygy relations in each slot
/// and the product relations `g_pq g_p'q' = (m_p m_p') ⊗ (n_q n_q')`.
#[derive(Clone, Debug)]
pub struct TensorPresentation {
    pub ring: PolyRing,
    pub m_gens: Vec<Polynomial>,
    pub n_gens: Vec<Polynomial>,
    /// `symbols[p][q] = g_pq`.
    pub symbols: Vec<Vec<Polynomial>>,
    pub relations: Vec<Polynomial>,
    /// `λ(g_pq) = m_p n_q` into `M`, and `λ'` into `N` (same formula).
    pub lambda: RingHom,
    pub lambda_p: RingHom,
    /// `B -> B[g]`.
    pub embed: RingHom,
    pub square: CrossedSquareRep,
}

fn ideal_type(cm: &CrossedModuleRep, which: &str) -> Result<()> {
    let b = cm.base.ring();
    if cm.top.ring() != b
        || !cm.action.agrees_with(&RingHom::identity(b))
        || !cm.boundary.agrees_with(&RingHom::identity(b))
        || !cm.top.relations().is_zero()
    {
        return Err(CoreError::Invalid(format!("{which} must be an ideal of the base with no relations")));
    }
    Ok(())
}

/// Adjoins one variable per `(name, weight)` to `base`, renaming on clashes.
fn adjoin(base: &PolyRing, new: &[(String, u32)]) -> Result<PolyRing> {
    let mut names = base.names().to_vec();
    let mut weights = base.weights().to_vec();
    for (n, w) in new {
        let n = base.fresh_name(n, &names);
        names.push(n);
        weights.push(*w);
    }
    Ok(PolyRing::with_weights(&names, &weights, base.field(), base.order())?)
}

fn weight(p: &Polynomial) -> u32 {
    p.degree().unwrap_or(0).max(1) as u32
}

pub fn tensor_square(m: &CrossedModuleRep, n: &CrossedModuleRep) -> Result<TensorPresentation> {
    ideal_type(m, "M")?;
    ideal_type(n, "N")?;
    let base = m.base.ring();
    if n.base.ring() != base {
        return Err(CoreError::Invalid("M and N need a common base".into()));
    }
    let budget = m.base.relations().budget();
    let mg: Vec<Polynomial> = m.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let ng: Vec<Polynomial> = n.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut new = Vec::new();
    for (p, a) in mg.iter().enumerate() {
        for (q, b) in ng.iter().enumerate() {
            new.push((format!("g{}_{}", p + 1, q + 1), weight(a) + weight(b)));
        }
    }
    let ring = adjoin(base, &new)?;
    let embed = RingHom::by_name(base, &ring)?;
    let nb = base.nvars();
    let symbols: Vec<Vec<Polynomial>> =
        (0..mg.len()).map(|p| (0..ng.len()).map(|q| ring.var(nb + p * ng.len() + q)).collect()).collect();

    let mut relations: Vec<Polynomial> = m.base.relations().gens().iter().map(|g| embed.apply(g)).collect();
    if !mg.is_empty() && !ng.is_empty() {
        for s in syzygies(&mg, budget)?.vectors {
            for q in 0..ng.len() {
                let r = s.coords().iter().enumerate().fold(ring.zero(), |acc, (p, c)| {
                    &acc + &(&embed.apply(c) * &symbols[p][q])
                });
                relations.push(r);
            }
        }
        for s in syzygies(&ng, budget)?.vectors {
            for p in 0..mg.len() {
                let r = s.coords().iter().enumerate().fold(ring.zero(), |acc, (q, c)| {
                    &acc + &(&embed.apply(c) * &symbols[p][q])
                });
                relations.push(r);
            }
        }
    }
    let m_ideal = Ideal::new(base, mg.clone())?.with_budget(budget);
    let n_ideal = Ideal::new(base, ng.clone())?.with_budget(budget);
    let pairs: Vec<(usize, usize)> = (0..mg.len()).flat_map(|p| (0..ng.len()).map(move |q| (p, q))).collect();
    for (i, &(p, q)) in pairs.iter().enumerate() {
        for &(p2, q2) in &pairs[i..] {
            let a = m_ideal.lift_cofactors(&(&mg[p] * &mg[p2]))?;
            let b = n_ideal.lift_cofactors(&(&ng[q] * &ng[q2]))?;
            let mut rhs = ring.zero();
            for (k, ak) in a.iter().enumerate() {
                for (l, bl) in b.iter().enumerate() {
                    if !ak.is_zero() && !bl.is_zero() {
                        rhs = &rhs + &(&embed.apply(&(ak * bl)) * &symbols[k][l]);
                    }
                }
            }
            relations.push(&(&symbols[p][q] * &symbols[p2][q2]) - &rhs);
        }
    }
    relations.retain(|r| !r.is_zero());

    let mut images: Vec<Polynomial> = (0..nb).map(|v| base.var(v)).collect();
    for &(p, q) in &pairs {
        images.push(&mg[p] * &ng[q]);
    }
    let lambda = RingHom::new(&ring, base, images)?;
    let numerator = Ideal::new(&ring, symbols.iter().flatten().cloned().collect())?.with_budget(budget);
    let id = RingHom::identity(base);
    let square = CrossedSquareRep {
        l: Subquotient::new(numerator, Ideal::new(&ring, relations.clone())?.with_budget(budget))?,
        m: m.top.clone(),
        n: n.top.clone(),
        base: m.base.clone(),
        d2: lambda.clone(),
        d2p: lambda.clone(),
        mu: id.clone(),
        mup: id.clone(),
        act_l: embed.clone(),
        act_m: id.clone(),
        act_n: id,
        l_gens: symbols.iter().flatten().cloned().collect(),
        m_gens: mg.clone(),
        n_gens: ng.clone(),
        h: HRule::Tensor { m_ideal, n_ideal, symbols: symbols.clone(), embed: embed.clone() },
    };
    Ok(TensorPresentation {
        ring,
        m_gens: mg,
        n_gens: ng,
        symbols,
        relations,
        lambda: lambda.clone(),
        lambda_p: lambda,
        embed,
        square,
    })
}

impl TensorPresentation {
    /// The tensor square viewed as a crossed module over the base via `λ`.
    pub fn as_crossed_module(&self) -> CrossedModuleRep {
        CrossedModuleRep {
            top: self.square.l.clone(),
            base: self.square.base.clone(),
            boundary: self.lambda.clone(),
            action: self.embed.clone(),
            gens: self.square.l_gens.clone(),
        }
    }
}

/// `(X ⋊ Y) / P` with injections `i: X -> X ⊔ Y`, `j: Y -> X ⊔ Y`.
#[derive(Clone, Debug)]
pub struct CoproductRep {
    pub cm: CrossedModuleRep,
    pub i: RingHom,
    pub j: RingHom,
}

/// Coproduct of crossed modules over a common base. Both are first put in
/// presented form `B[gens]/Rel`; the result is `B[x, y]` modulo both
/// relation sets and the cross terms `x y - ∂(x) y`, `x y - ∂(y) x`.
pub fn coproduct(x: &CrossedModuleRep, y: &CrossedModuleRep) -> Result<CoproductRep> {
    let (x, y) = (x.presented()?, y.presented()?);
    let base = x.base.ring();
    if y.base.ring() != base || !x.base.same_presentation(&y.base)? {
        return Err(CoreError::Invalid("coproduct needs a common base".into()));
    }
    let budget = x.base.relations().budget();
    let (xr, yr) = (x.top.ring(), y.top.ring());
    let var_of = |r: &PolyRing, g: &Polynomial| (0..r.nvars()).find(|&v| *g == r.var(v)).expect("generator variable");
    let xv: Vec<usize> = x.gens.iter().map(|g| var_of(xr, g)).collect();
    let yv: Vec<usize> = y.gens.iter().map(|g| var_of(yr, g)).collect();
    let mut new: Vec<(String, u32)> = xv.iter().map(|&v| (xr.name(v).to_string(), xr.weights()[v])).collect();
    new.extend(yv.iter().map(|&v| (yr.name(v).to_string(), yr.weights()[v])));
    let ring = adjoin(base, &new)?;
    let nb = base.nvars();
    let inject = |r: &PolyRing, vars: &[usize], offset: usize| -> Result<RingHom> {
        let imgs = (0..r.nvars())
            .map(|v| match vars.iter().position(|&u| u == v) {
                Some(k) => ring.var(nb + offset + k),
                None => ring.var_named(r.name(v)).expect("base variable"),
            })
            .collect();
        Ok(RingHom::new(r, &ring, imgs)?)
    };
    let i = inject(xr, &xv, 0)?;
    let j = inject(yr, &yv, xv.len())?;
    let inc = RingHom::by_name(base, &ring)?;
    let mut rels: Vec<Polynomial> = x.top.relations().gens().iter().map(|g| i.apply(g)).collect();
    rels.extend(y.top.relations().gens().iter().map(|g| j.apply(g)));
    let xs: Vec<Polynomial> = x.gens.iter().map(|g| i.apply(g)).collect();
    let ys: Vec<Polynomial> = y.gens.iter().map(|g| j.apply(g)).collect();
    for (xg, xo) in xs.iter().zip(&x.gens) {
        let dx = inc.apply(&x.boundary.apply(xo));
        for (yg, yo) in ys.iter().zip(&y.gens) {
            let dy = inc.apply(&y.boundary.apply(yo));
            let prod = xg * yg;
            rels.push(&prod - &(&dx * yg));
            rels.push(&prod - &(&dy * xg));
        }
    }
    rels.retain(|r| !r.is_zero());
    let mut images: Vec<Polynomial> = (0..nb).map(|v| base.var(v)).collect();
    images.extend(x.gens.iter().map(|g| x.boundary.apply(g)));
    images.extend(y.gens.iter().map(|g| y.boundary.apply(g)));
    let boundary = RingHom::new(&ring, base, images)?;
    let mut gens = xs;
    gens.extend(ys);
    let cm = CrossedModuleRep {
        top: Subquotient::new(
            Ideal::new(&ring, gens.clone())?.with_budget(budget),
            Ideal::new(&ring, rels)?.with_budget(budget),
        )?,
        base: x.base.clone(),
        boundary,
        action: inc,
        gens,
    };
    Ok(CoproductRep { cm, i, j })
}

/// A relation of the assembly, tagged with its family.
#[derive(Clone, Debug)]
pub struct TaggedRelation {
    pub family: String,
    pub poly: Polynomial,
}

/// `{(M ⊗ M̄) ⊔ C} / ~` for `M = (S_i)`, `M̄ = (S_i - t_i)` in `E1` and `C`
/// the free crossed module on S3. With S3 empty this is the tensor corner.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub tensor: TensorPresentation,
    pub ring: PolyRing,
    pub numerator: Ideal,
    pub relations: Vec<TaggedRelation>,
    /// The gluing relations with the signs as printed; evaluated, not imposed.
    pub printed_gluing: Vec<TaggedRelation>,
    /// `T_j` in the assembly ring.
    pub t_vars: Vec<Polynomial>,
    pub square: CrossedSquareRep,
}

impl Assembly {
    pub fn relation_ideal(&self) -> Result<Ideal> {
        let budget = self.numerator.budget();
        Ok(Ideal::new(&self.ring, self.relations.iter().map(|r| r.poly.clone()).collect())?.with_budget(budget))
    }

    /// Filtered dimensions of the presented algebra.
    pub fn dims(&self, max_degree: u64) -> Result<GradedDims> {
        self.square.l.dims(max_degree)
    }
}

fn corner(sk: &Skeleton2, gens: Vec<Polynomial>) -> Result<CrossedModuleRep> {
    let e1 = sk.ring(1);
    let id = RingHom::identity(e1);
    Ok(CrossedModuleRep {
        top: Subquotient::ideal(sk.ideal(1, gens.clone())?),
        base: Subquotient::whole(e1, sk.budget()),
        boundary: id.clone(),
        action: id,
        gens,
    })
}

pub fn assemble_l(sk: &Skeleton2) -> Result<Assembly> {
    let m = corner(sk, (0..sk.n_s2()).map(|i| sk.s2_var(i)).collect())?;
    let nbar = corner(sk, (0..sk.n_s2()).map(|i| sk.s2_bar(i)).collect())?;
    let tensor = tensor_square(&m, &nbar)?;
    let tag = |family: &str, poly: Polynomial| TaggedRelation { family: family.to_string(), poly };
    if sk.n_s3() == 0 {
        return Ok(Assembly {
            ring: tensor.ring.clone(),
            numerator: tensor.square.l.numerator().clone(),
            relations: tensor.relations.iter().map(|r| tag("tensor", r.clone())).collect(),
            printed_gluing: Vec::new(),
            t_vars: Vec::new(),
            square: tensor.square.clone(),
            tensor,
        });
    }
    let e1 = sk.ring(1);
    let budget = sk.budget();
    let names: Vec<String> = sk.data().s3.iter().map(|g| g.name.clone()).collect();
    let c = free_crossed_on(&Subquotient::whole(e1, budget), &names, sk.f3())?;
    let co = coproduct(&tensor.as_crossed_module(), &c)?;
    let ring = co.cm.top.ring().clone();
    let inc = co.cm.action.clone();
    let gsym: Vec<Vec<Polynomial>> =
        tensor.symbols.iter().map(|row| row.iter().map(|g| co.i.apply(g)).collect()).collect();
    let t_vars: Vec<Polynomial> = c.gens.iter().map(|t| co.j.apply(t)).collect();

    let mut relations = Vec::new();
    for r in tensor.relations.iter() {
        relations.push(tag("tensor", co.i.apply(r)));
    }
    for r in c.top.relations().gens() {
        relations.push(tag("free", co.j.apply(r)));
    }
    let known: Vec<Polynomial> = relations.iter().map(|r| r.poly.clone()).collect();
    for r in co.cm.top.relations().gens() {
        if !known.contains(r) {
            relations.push(tag("coproduct", r.clone()));
        }
    }
    let m_ideal = sk.ideal(1, tensor.m_gens.clone())?;
    let n_ideal = sk.ideal(1, tensor.n_gens.clone())?;
    let mut printed = Vec::new();
    for (j, f3) in sk.f3().iter().enumerate() {
        let t = &t_vars[j];
        let a = m_ideal.lift_cofactors(f3)?;
        for (q, nq) in tensor.n_gens.iter().enumerate() {
            let lhs = a.iter().enumerate().fold(ring.zero(), |acc, (p, ap)| &acc + &(&inc.apply(ap) * &gsym[p][q]));
            let act = &inc.apply(nq) * t;
            relations.push(tag("gluing-1", &lhs - &act));
            printed.push(tag("gluing-1", &lhs - &(t - &act)));
        }
        let b = n_ideal.lift_cofactors(f3)?;
        for (p, mp) in tensor.m_gens.iter().enumerate() {
            let lhs = b.iter().enumerate().fold(ring.zero(), |acc, (q, bq)| &acc + &(&inc.apply(bq) * &gsym[p][q]));
            let act = &inc.apply(mp) * t;
            relations.push(tag("gluing-2", &lhs - &act));
            printed.push(tag("gluing-2", &lhs - &(&act - t)));
        }
    }
    relations.retain(|r| !r.poly.is_zero());

    let rel_ideal = Ideal::new(&ring, relations.iter().map(|r| r.poly.clone()).collect())?.with_budget(budget);
    let numerator = co.cm.top.numerator().clone();
    let mut l_gens: Vec<Polynomial> = gsym.iter().flatten().cloned().collect();
    l_gens.extend(t_vars.iter().cloned());
    let HRule::Tensor { m_ideal: hm, n_ideal: hn, .. } = &tensor.square.h else {
        unreachable!("tensor square carries the tensor rule")
    };
    let square = CrossedSquareRep {
        l: Subquotient::new(numerator.clone(), rel_ideal)?,
        m: tensor.square.m.clone(),
        n: tensor.square.n.clone(),
        base: tensor.square.base.clone(),
        d2: co.cm.boundary.clone(),
        d2p: co.cm.boundary.clone(),
        mu: tensor.square.mu.clone(),
        mup: tensor.square.mup.clone(),
        act_l: inc.clone(),
        act_m: tensor.square.act_m.clone(),
        act_n: tensor.square.act_n.clone(),
        l_gens,
        m_gens: tensor.m_gens.clone(),
        n_gens: tensor.n_gens.clone(),
        h: HRule::Tensor { m_ideal: hm.clone(), n_ideal: hn.clone(), symbols: gsym, embed: inc },
    };
    Ok(Assembly { tensor, ring, numerator, relations, printed_gluing: printed, t_vars, square })
}

/// `Φ`: base variables to `s_1` of themselves, `g_pq` to `h(m_p, n̄_q)`,
/// `T_j` to `T_j`.
pub fn phi(sk: &Skeleton2, asm: &Assembly, h: &CrossedSquareRep) -> Result<RingHom> {
    let e1 = sk.ring(1);
    let s1 = sk.degeneracy(1, 1);
    let mut images: Vec<Polynomial> = (0..e1.nvars()).map(|v| s1.apply(&e1.var(v))).collect();
    let HRule::Tensor { symbols, .. } = &asm.square.h else { unreachable!() };
    let ring = &asm.ring;
    let mut rest: Vec<(usize, Polynomial)> = Vec::new();
    for (p, row) in symbols.iter().enumerate() {
        for (q, g) in row.iter().enumerate() {
            let v = (0..ring.nvars()).find(|&v| ring.var(v) == *g).expect("symbol variable");
            rest.push((v, h.h(&asm.tensor.m_gens[p], &asm.tensor.n_gens[q])?));
        }
    }
    for (j, t) in asm.t_vars.iter().enumerate() {
        let v = (0..ring.nvars()).find(|&v| ring.var(v) == *t).expect("free generator variable");
        rest.push((v, sk.s3_var(j)));
    }
    rest.sort_by_key(|e| e.0);
    if rest.iter().enumerate().any(|(k, (v, _))| *v != e1.nvars() + k) {
        return Err(CoreError::Invalid("assembly ring is not E1 followed by its generators".into()));
    }
    images.extend(rest.into_iter().map(|(_, p)| p));
    Ok(RingHom::new(ring, sk.ring(2), images)?)
}

/// The comparison of the assembled corner with `L = NE2 / P2`:
/// well-definedness of `Φ`, surjectivity, Hilbert agreement, and
/// compatibility with `h`.
pub fn compare_corner(sk: &Skeleton2, max_degree: u64) -> Result<HomotopySection> {
    let mo = moore(sk)?;
    let p2 = peiffer_p2(sk, &mo, P2Route::CFamilies)?;
    compare_corner_with(sk, &mo, &p2, max_degree)
}

pub fn compare_corner_with(sk: &Skeleton2, mo: &MooreData, p2: &Ideal, max_degree: u64) -> Result<HomotopySection> {
    let asm = assemble_l(sk)?;
    let sq = crate::crossed::simplicial_square(sk, mo, p2)?;
    let f = phi(sk, &asm, &sq)?;
    let l = Subquotient::new(mo.ne2.clone(), p2.clone())?;
    let mut checks = Vec::new();

    let mut wd = Check::new("well-defined").with_note("every relation maps into P2, generators into NE2");
    for r in &asm.relations {
        wd.zero(|| format!("{} relation {}", r.family, r.poly), &l.normal_form(&f.apply(&r.poly))?);
    }
    for g in asm.numerator.gens() {
        wd.expect(mo.ne2.contains(&f.apply(g))?, || format!("image of {g} is not in NE2"));
    }
    checks.push(wd);

    if !asm.printed_gluing.is_empty() {
        let mut ok = 0;
        for r in &asm.printed_gluing {
            if l.normal_form(&f.apply(&r.poly))?.is_zero() {
                ok += 1;
            }
        }
        let mut c = Check::info(
            "gluing-as-printed",
            format!(
                "{ok} of {} gluing relations with the printed signs map into P2; not imposed",
                asm.printed_gluing.len()
            ),
        );
        c.checked = asm.printed_gluing.len();
        checks.push(c);
    }

    let mut bd = Check::new("gluing-boundary").with_note("both sides of each gluing relation have the same boundary");
    for r in asm.relations.iter().filter(|r| r.family.starts_with("gluing")) {
        bd.zero(|| format!("{}", r.poly), &asm.square.d2.apply(&r.poly));
    }
    checks.push(bd);

    let mut surj = Check::new("surjective").with_note("every generator of NE2 lifts modulo P2");
    let graph = HomGraph::new(&f, Some(p2), sk.budget())?;
    let e1n = sk.ring(1).nvars();
    for g in mo.ne2.groebner_basis()? {
        match graph.preimage(g)? {
            None => surj.expect(false, || format!("{g} has no preimage")),
            Some(a) => {
                let free_part = a.terms().iter().any(|(m, _)| (e1n..asm.ring.nvars()).all(|v| m.exponent(v) == 0));
                surj.expect(!free_part, || format!("preimage {a} of {g} leaves the numerator"));
            }
        }
    }
    checks.push(surj);

    let ours = asm.dims(max_degree)?;
    let theirs = l.dims(max_degree)?;
    checks.push(Check::from_bool(
        "hilbert",
        ours == theirs,
        format!("filtered dimensions agree through degree {max_degree}"),
    ));

    let mut ph = Check::new("phi-h").with_note("Φ(h(m, n)) = h(m, n) mod P2 on products of generators");
    let e1 = sk.ring(1);
    let mut ms: Vec<Polynomial> = asm.tensor.m_gens.clone();
    for a in &asm.tensor.m_gens {
        for b in &asm.tensor.m_gens {
            ms.push(a * b);
        }
        ms.push(&e1.var(0) * a);
    }
    for m in &ms {
        for n in &asm.tensor.n_gens {
            let res = &f.apply(&asm.square.h(m, n)?) - &sq.h(m, n)?;
            ph.zero(|| format!("m = {m}, n = {n}"), &l.normal_form(&res)?);
        }
    }
    checks.push(ph);

    let title = if sk.n_s3() == 0 {
        "top corner: Ker d1 (x) Ker d0 against NE2/P2".to_string()
    } else {
        "top corner: (tensor + free on S3)/~ against NE2/P2".to_string()
    };
    Ok(HomotopySection {
        title,
        rows: vec![DimsRow::new("assembly", &ours), DimsRow::new("NE2/P2", &theirs)],
        checks,
        witnesses: Vec::new(),
    })
}

/// Axiom suite of the tensor square on `M = (S_i)`, `M̄ = (S_i - t_i)`.
pub fn tensor_corner_axioms(sk: &Skeleton2) -> Result<crate::report::AxiomReport> {
    let asm = assemble_l(sk)?;
    verify_square(&asm.tensor.square, "tensor square Ker d0 (x) Ker d1")
}

/// Hilbert data of a presented algebra `numerator / relations`.
pub fn presented_dims(numerator: &Ideal, relations: &Ideal, max_degree: u64) -> Result<GradedDims> {
    affine_hilbert(relations, max_degree)?
        .checked_sub(&affine_hilbert(numerator, max_degree)?)
        .ok_or_else(|| CoreError::Invalid("relations are not inside the numerator".into()))
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

    #[test]
    fn tensor_of_fixture_a() {
        let s = sk(A);
        let asm = assemble_l(&s).unwrap();
        let t = &asm.tensor;
        assert_eq!(t.ring.names(), ["x", "S", "g1_1"]);
        let rels: Vec<String> = t.relations.iter().map(|r| r.to_string()).collect();
        assert_eq!(rels, ["x^2*S*g1_1 - S^2*g1_1 + g1_1^2"]);
        let g = &t.symbols[0][0];
        assert_eq!(t.lambda.apply(g).to_string(), "-x^2*S + S^2");
        let rep = verify_square(&t.square, "tensor").unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn tensor_with_zero_module_is_zero() {
        let s = sk(A);
        let m = corner(&s, vec![s.s2_var(0)]).unwrap();
        let z = corner(&s, vec![]).unwrap();
        let t = tensor_square(&m, &z).unwrap();
        assert!(t.symbols.iter().all(|r| r.is_empty()));
        assert!(t.square.l.dims(4).unwrap().is_zero());
    }

    #[test]
    fn coproduct_peiffer_terms() {
        let s = sk(A);
        let m = corner(&s, vec![s.s2_var(0)]).unwrap();
        let co = coproduct(&m, &m).unwrap();
        assert!(crate::crossed::verify_xmod(&co.cm, "coproduct").unwrap().passed());
        for r in co.cm.top.relations().gens() {
            assert!(co.cm.base.normal_form(&co.cm.boundary.apply(r)).unwrap().is_zero());
        }
        let x = &co.cm.gens[0];
        let y = &co.cm.gens[1];
        let e = co.cm.top.ring();
        let s_ = e.var_named("S").unwrap();
        assert!(co.cm.top.relations().contains(&(&(x * y) - &(&s_ * y))).unwrap());
        let zero = corner(&s, vec![]).unwrap();
        let co0 = coproduct(&m, &zero).unwrap();
        assert_eq!(co0.cm.top.dims(6).unwrap(), m.presented().unwrap().top.dims(6).unwrap());
    }

    #[test]
    fn corner_of_a_agrees() {
        let s = sk(A);
        let sec = compare_corner(&s, 6).unwrap();
        for c in &sec.checks {
            assert!(c.passed(), "{c}");
        }
        assert_eq!(sec.rows[0].dims, [0, 0, 0, 0, 1, 2, 4]);
    }
}
