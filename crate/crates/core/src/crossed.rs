//! Crossed modules and crossed squares presented as subquotients of
//! polynomial rings, the free constructions, the functors `M(-, n)` and the
//! axiom suites.
//!
//! Every action is ambient multiplication through a declared ring map, so
//! an axiom instance is a polynomial identity checked by a normal form.

use xsquare_algebra::{affine_hilbert, ideal_intersect, GradedDims, Ideal, PolyRing, Polynomial, RingHom};

use crate::report::{AxiomReport, Check, Status};
use crate::simplicial::{moore, peiffer_p2, MooreData, P2Route, Skeleton2};
use crate::{CoreError, Result};

/// `I / P` inside an ambient ring, elements represented by ambient
/// polynomials and compared by normal form modulo `P`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    numerator: Ideal,
    relations: Ideal,
}

impl Subquotient {
    pub fn new(numerator: Ideal, relations: Ideal) -> Result<Self> {
        if numerator.ring() != relations.ring() {
            return Err(CoreError::Invalid("subquotient ideals live in different rings".into()));
        }
        Ok(Subquotient { numerator, relations })
    }

    /// The ring itself, no relations.
    pub fn whole(ring: &PolyRing, budget: u64) -> Self {
        Subquotient {
            numerator: Ideal::unit(ring).with_budget(budget),
            relations: Ideal::zero(ring).with_budget(budget),
        }
    }

    /// `ring / relations`.
    pub fn quotient_ring(relations: Ideal) -> Self {
        let budget = relations.budget();
        Subquotient { numerator: Ideal::unit(relations.ring()).with_budget(budget), relations }
    }

    /// An ideal with no relations.
    pub fn ideal(numerator: Ideal) -> Self {
        let relations = Ideal::zero(numerator.ring()).with_budget(numerator.budget());
        Subquotient { numerator, relations }
    }

    pub fn ring(&self) -> &PolyRing {
        self.numerator.ring()
    }

    pub fn numerator(&self) -> &Ideal {
        &self.numerator
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(self.relations.normal_form(p)?)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.numerator.contains(p)?)
    }

    pub fn relations_inside(&self) -> Result<bool> {
        Ok(self.numerator.contains_ideal(&self.relations)?)
    }

    /// Filtered dimensions of `I / P`.
    pub fn dims(&self, max_degree: u64) -> Result<GradedDims> {
        let hp = affine_hilbert(&self.relations, max_degree)?;
        let hi = affine_hilbert(&self.numerator, max_degree)?;
        hp.checked_sub(&hi)
            .ok_or_else(|| CoreError::Invalid("relations are not contained in the numerator".into()))
    }

    /// Same ring and equal ideals.
    pub fn same_presentation(&self, other: &Subquotient) -> Result<bool> {
        Ok(self.ring() == other.ring()
            && self.numerator.equals(&other.numerator)?
            && self.relations.equals(&other.relations)?)
    }

    pub fn is_trivial(&self) -> Result<bool> {
        self.relations.contains_ideal(&self.numerator).map_err(Into::into)
    }
}

/// `∂: C -> B` with `B` acting on `C` through `action`.
#[derive(Clone, Debug)]
pub struct CrossedModuleRep {
    pub top: Subquotient,
    pub base: Subquotient,
    pub boundary: RingHom,
    pub action: RingHom,
    /// Generators of the top numerator, used for the axiom instances.
    pub gens: Vec<Polynomial>,
}

impl CrossedModuleRep {
    pub fn act(&self, r: &Polynomial, c: &Polynomial) -> Polynomial {
        &self.action.apply(r) * c
    }

    pub fn same_presentation(&self, other: &CrossedModuleRep) -> Result<bool> {
        Ok(self.top.same_presentation(&other.top)?
            && self.base.same_presentation(&other.base)?
            && self.boundary.agrees_with(&other.boundary)
            && self.action.agrees_with(&other.action))
    }

    /// Whether the top ring is the base ring with the generators adjoined
    /// as fresh variables, acted on by inclusion.
    fn is_presented(&self) -> bool {
        let (top, base) = (self.top.ring(), self.base.ring());
        let adjoined = self.gens.iter().all(|g| {
            g.len() == 1
                && g.leading_coeff().is_some_and(|c| c.is_one())
                && g.leading_monomial().is_some_and(|m| {
                    m.total_degree() == 1
                        && (0..top.nvars()).any(|v| m.exponent(v) == 1 && base.var_index(top.name(v)).is_none())
                })
        });
        adjoined
            && base.names().iter().all(|n| top.var_index(n).is_some())
            && RingHom::by_name(base, top).is_ok_and(|inc| inc.agrees_with(&self.action))
    }

    /// An equivalent crossed module whose top is `B[y_1..y_k]` modulo
    /// linear (syzygy) and product relations. Already presented modules are
    /// returned unchanged.
    pub fn presented(&self) -> Result<CrossedModuleRep> {
        if self.is_presented() {
            return Ok(self.clone());
        }
        if self.top.ring() != self.base.ring() || !self.action.agrees_with(&RingHom::identity(self.base.ring())) {
            return Err(CoreError::Invalid(
                "only ideal-type crossed modules (top inside the base) can be put in presented form".into(),
            ));
        }
        let base = self.base.ring();
        let budget = self.base.relations().budget();
        let gens: Vec<Polynomial> = self.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let mut names: Vec<String> = base.names().to_vec();
        let mut weights = base.weights().to_vec();
        for i in 0..gens.len() {
            let n = base.fresh_name(&format!("y{}", i + 1), &names);
            names.push(n);
            weights.push(gens[i].degree().unwrap_or(0).max(1) as u32);
        }
        let ring = PolyRing::with_weights(&names, &weights, base.field(), base.order())?;
        let inc = RingHom::by_name(base, &ring)?;
        let nb = base.nvars();
        let ys: Vec<Polynomial> = (0..gens.len()).map(|i| ring.var(nb + i)).collect();
        let mut rels: Vec<Polynomial> = self.base.relations().gens().iter().map(|g| inc.apply(g)).collect();
        let lin = |coeffs: &[Polynomial]| {
            coeffs.iter().zip(&ys).fold(ring.zero(), |acc, (c, y)| &acc + &(&inc.apply(c) * y))
        };
        if !gens.is_empty() {
            for s in xsquare_algebra::syzygies(&gens, budget)?.vectors {
                rels.push(lin(s.coords()));
            }
            let m_ideal = Ideal::new(base, gens.clone())?.with_budget(budget);
            for i in 0..gens.len() {
                for j in i..gens.len() {
                    let c = m_ideal.lift_cofactors(&(&gens[i] * &gens[j]))?;
                    rels.push(&(&ys[i] * &ys[j]) - &lin(&c));
                }
            }
            for r in self.top.relations().gens() {
                let c = m_ideal.lift_cofactors(r)?;
                rels.push(lin(&c));
            }
        }
        let mut images: Vec<Polynomial> = (0..nb).map(|v| base.var(v)).collect();
        images.extend(gens.iter().cloned());
        let boundary = RingHom::new(&ring, base, images)?;
        Ok(CrossedModuleRep {
            top: Subquotient::new(
                Ideal::new(&ring, ys.clone())?.with_budget(budget),
                Ideal::new(&ring, rels)?.with_budget(budget),
            )?,
            base: self.base.clone(),
            boundary,
            action: inc,
            gens: ys,
        })
    }
}

/// How the pairing `h: M x N -> L` is evaluated.
#[derive(Clone, Debug)]
pub enum HRule {
    /// Negative control: `h = 0`.
    Zero,
    /// `h(m, n) = m n` in a common ambient ring.
    Product,
    /// `h(x, n) = s_1 x (s_1 y - s_0 y)` with `y = n - s_0 d_0 n`.
    Simplicial { s0: RingHom, s1: RingHom, rho: RingHom },
    /// `h(m, n) = sum a_p b_q g_pq` for cofactor expansions of `m`, `n`.
    Tensor { m_ideal: Ideal, n_ideal: Ideal, symbols: Vec<Vec<Polynomial>>, embed: RingHom },
}

impl HRule {
    pub fn describe(&self) -> String {
        match self {
            HRule::Zero => "h = 0".into(),
            HRule::Product => "h(m,n) = m*n".into(),
            HRule::Simplicial { .. } => "h(m,n) = s1(m)*(s1(y) - s0(y)) with y = n - s0(d0(n))".into(),
            HRule::Tensor { .. } => "h(m_p,n_q) = g_pq, extended bilinearly".into(),
        }
    }
}

/// A crossed square
///
/// ```text
///   L --d2--> M
///   |         |
///  d2p        mu
///   v         v
///   N --mup-> base
/// ```
///
/// with the base acting on every corner through `act_*`.
#[derive(Clone, Debug)]
pub struct CrossedSquareRep {
    pub l: Subquotient,
    pub m: Subquotient,
    pub n: Subquotient,
    pub base: Subquotient,
    pub d2: RingHom,
    pub d2p: RingHom,
    pub mu: RingHom,
    pub mup: RingHom,
    pub act_l: RingHom,
    pub act_m: RingHom,
    pub act_n: RingHom,
    pub l_gens: Vec<Polynomial>,
    pub m_gens: Vec<Polynomial>,
    pub n_gens: Vec<Polynomial>,
    pub h: HRule,
}

impl CrossedSquareRep {
    /// `h(m, n)` as an ambient polynomial of `L`, not reduced.
    pub fn h(&self, m: &Polynomial, n: &Polynomial) -> Result<Polynomial> {
        Ok(match &self.h {
            HRule::Zero => self.l.ring().zero(),
            HRule::Product => m * n,
            HRule::Simplicial { s0, s1, rho } => {
                let y = n - &rho.apply(n);
                &s1.apply(m) * &(&s1.apply(&y) - &s0.apply(&y))
            }
            HRule::Tensor { m_ideal, n_ideal, symbols, embed } => {
                let a = m_ideal.lift_cofactors(m)?;
                let b = n_ideal.lift_cofactors(n)?;
                let mut acc = self.l.ring().zero();
                for (p, ap) in a.iter().enumerate() {
                    if ap.is_zero() {
                        continue;
                    }
                    let ap = embed.apply(ap);
                    for (q, bq) in b.iter().enumerate() {
                        if !bq.is_zero() {
                            acc = &acc + &(&(&ap * &embed.apply(bq)) * &symbols[p][q]);
                        }
                    }
                }
                acc
            }
        })
    }

    pub fn with_h(mut self, h: HRule) -> Self {
        self.h = h;
        self
    }

    /// Action of a base element on `L`.
    fn on_l(&self, p: &Polynomial, l: &Polynomial) -> Polynomial {
        &self.act_l.apply(p) * l
    }

    pub fn same_presentation(&self, other: &CrossedSquareRep) -> Result<bool> {
        Ok(self.l.same_presentation(&other.l)?
            && self.m.same_presentation(&other.m)?
            && self.n.same_presentation(&other.n)?
            && self.base.same_presentation(&other.base)?
            && self.d2.agrees_with(&other.d2)
            && self.d2p.agrees_with(&other.d2p))
    }
}

/// `h(m, n)` reduced modulo the relations of `L`, after checking membership.
pub fn h_eval(sq: &CrossedSquareRep, m: &Polynomial, n: &Polynomial) -> Result<Polynomial> {
    if !sq.m.contains(m)? {
        return Err(CoreError::Invalid(format!("{m} is not in the corner M")));
    }
    if !sq.n.contains(n)? {
        return Err(CoreError::Invalid(format!("{n} is not in the corner N")));
    }
    sq.l.normal_form(&sq.h(m, n)?)
}

/// Scalars used for the `k`-linearity instances; those not invertible in the
/// field are skipped.
fn scalars(ring: &PolyRing) -> Vec<(String, Polynomial)> {
    let f = ring.field();
    let mut out = vec![("2".to_string(), ring.from_i64(2)), ("-1".to_string(), ring.from_i64(-1))];
    if let Some(inv) = f.from_i64(3).inv() {
        out.push(("1/3".to_string(), ring.constant(inv)));
    }
    out.retain(|(_, p)| !p.is_zero());
    out
}

fn ring_vars(ring: &PolyRing) -> Vec<Polynomial> {
    (0..ring.nvars()).map(|v| ring.var(v)).collect()
}

/// CM1 and CM2 on generator pairs, plus well-definedness of `∂`.
pub fn verify_xmod(cm: &CrossedModuleRep, subject: &str) -> Result<AxiomReport> {
    let mut wd = Check::new("wd");
    wd.expect(cm.top.relations_inside()?, || "top relations are not inside the numerator".into());
    for r in cm.top.relations().gens() {
        let img = cm.base.normal_form(&cm.boundary.apply(r))?;
        wd.zero(|| format!("boundary of relation {r}"), &img);
    }
    for r in cm.base.relations().gens() {
        for c in &cm.gens {
            wd.zero(|| format!("base relation {r} acting on {c}"), &cm.top.normal_form(&cm.act(r, c))?);
        }
    }
    let mut cm1 = Check::new("CM1").with_note("d(r.c) = r.d(c)");
    for r in ring_vars(cm.base.ring()) {
        for c in &cm.gens {
            let res = &cm.boundary.apply(&cm.act(&r, c)) - &(&r * &cm.boundary.apply(c));
            cm1.zero(|| format!("r = {r}, c = {c}"), &cm.base.normal_form(&res)?);
        }
    }
    let mut cm2 = Check::new("CM2").with_note("d(c).c' = c c'");
    for c in &cm.gens {
        let dc = cm.boundary.apply(c);
        for c2 in &cm.gens {
            let res = &cm.act(&dc, c2) - &(c * c2);
            cm2.zero(|| format!("c = {c}, c' = {c2}"), &cm.top.normal_form(&res)?);
        }
    }
    Ok(AxiomReport { subject: subject.to_string(), checks: vec![wd, cm1, cm2] })
}

/// The crossed square axioms on generator pairs. Axioms 1 and 6 hold by the
/// conventions of the representation (identity maps, one ordering of the
/// pairing); every other axiom is evaluated.
pub fn verify_square(sq: &CrossedSquareRep, subject: &str) -> Result<AxiomReport> {
    let (lq, mq, nq, bq) = (&sq.l, &sq.m, &sq.n, &sq.base);
    let (ls, ms, ns) = (&sq.l_gens, &sq.m_gens, &sq.n_gens);
    let base_vars = ring_vars(bq.ring());

    let mut wd = Check::new("wd").with_note("relations inside numerators, maps and h land in the corners");
    for (name, c) in [("L", lq), ("M", mq), ("N", nq)] {
        wd.expect(c.relations_inside()?, || format!("relations of {name} are not inside its numerator"));
    }
    for l in ls {
        wd.expect(mq.contains(&sq.d2.apply(l))?, || format!("d2({l}) is not in M"));
        wd.expect(nq.contains(&sq.d2p.apply(l))?, || format!("d2'({l}) is not in N"));
    }
    for r in lq.relations().gens() {
        wd.zero(|| format!("d2 of relation {r}"), &mq.normal_form(&sq.d2.apply(r))?);
        wd.zero(|| format!("d2' of relation {r}"), &nq.normal_form(&sq.d2p.apply(r))?);
    }
    for m in ms {
        for n in ns {
            wd.expect(lq.contains(&sq.h(m, n)?)?, || format!("h({m}, {n}) is not in L"));
        }
    }

    let ax1 = Check::new("1").with_note("vacuous: maps are the identity off their index set");

    let mut ax2 = Check::new("2").with_note("mu'(d2'(l)) = mu(d2(l))");
    for l in ls {
        let res = &sq.mup.apply(&sq.d2p.apply(l)) - &sq.mu.apply(&sq.d2.apply(l));
        ax2.zero(|| format!("l = {l}"), &bq.normal_form(&res)?);
    }

    let mut ax3 = Check::new("3").with_note("structure maps are equivariant");
    let mut actors: Vec<Polynomial> = base_vars.clone();
    actors.extend(ms.iter().map(|m| sq.mu.apply(m)));
    actors.extend(ns.iter().map(|n| sq.mup.apply(n)));
    for p in &actors {
        for l in ls {
            let pl = sq.on_l(p, l);
            let res = &sq.d2.apply(&pl) - &(&sq.act_m.apply(p) * &sq.d2.apply(l));
            ax3.zero(|| format!("d2({p}.{l})"), &mq.normal_form(&res)?);
            let res = &sq.d2p.apply(&pl) - &(&sq.act_n.apply(p) * &sq.d2p.apply(l));
            ax3.zero(|| format!("d2'({p}.{l})"), &nq.normal_form(&res)?);
        }
        for m in ms {
            let res = &sq.mu.apply(&(&sq.act_m.apply(p) * m)) - &(p * &sq.mu.apply(m));
            ax3.zero(|| format!("mu({p}.{m})"), &bq.normal_form(&res)?);
        }
        for n in ns {
            let res = &sq.mup.apply(&(&sq.act_n.apply(p) * n)) - &(p * &sq.mup.apply(n));
            ax3.zero(|| format!("mu'({p}.{n})"), &bq.normal_form(&res)?);
        }
    }

    let mut ax4 = Check::new("4").with_note("products agree with actions through the boundaries");
    for l in ls {
        let via_m = sq.act_l.apply(&sq.mu.apply(&sq.d2.apply(l)));
        let via_n = sq.act_l.apply(&sq.mup.apply(&sq.d2p.apply(l)));
        for l2 in ls {
            let prod = l * l2;
            ax4.zero(|| format!("d2({l}).{l2}"), &lq.normal_form(&(&prod - &(&via_m * l2)))?);
            ax4.zero(|| format!("d2'({l}).{l2}"), &lq.normal_form(&(&prod - &(&via_n * l2)))?);
        }
    }
    for m in ms {
        for m2 in ms {
            let res = &(m * m2) - &(&sq.act_m.apply(&sq.mu.apply(m)) * m2);
            ax4.zero(|| format!("mu({m}).{m2}"), &mq.normal_form(&res)?);
        }
    }
    for n in ns {
        for n2 in ns {
            let res = &(n * n2) - &(&sq.act_n.apply(&sq.mup.apply(n)) * n2);
            ax4.zero(|| format!("mu'({n}).{n2}"), &nq.normal_form(&res)?);
        }
    }

    let mut ax5 = Check::new("5").with_note("the pairing agrees with products through the boundaries");
    for m in ms {
        for n in ns {
            let h = sq.h(m, n)?;
            let res = &sq.d2.apply(&h) - &(&sq.act_m.apply(&sq.mup.apply(n)) * m);
            ax5.zero(|| format!("d2 h({m}, {n})"), &mq.normal_form(&res)?);
            let res = &sq.d2p.apply(&h) - &(&sq.act_n.apply(&sq.mu.apply(m)) * n);
            ax5.zero(|| format!("d2' h({m}, {n})"), &nq.normal_form(&res)?);
        }
        for l in ls {
            let res = &sq.h(m, &sq.d2p.apply(l))? - &sq.on_l(&sq.mu.apply(m), l);
            ax5.zero(|| format!("h({m}, d2'({l}))"), &lq.normal_form(&res)?);
        }
    }
    for n in ns {
        for l in ls {
            let res = &sq.h(&sq.d2.apply(l), n)? - &sq.on_l(&sq.mup.apply(n), l);
            ax5.zero(|| format!("h(d2({l}), {n})"), &lq.normal_form(&res)?);
        }
    }

    let ax6 = Check::new("6").with_note("vacuous: the pairing is taken in the order M x N only");

    let mut ax7 = Check::new("7").with_note("additive in the first slot");
    let mut ax8 = Check::new("8").with_note("additive in the second slot");
    for m in ms {
        for n in ns {
            let h = sq.h(m, n)?;
            for m2 in ms {
                let res = &(&sq.h(&(m + m2), n)? - &h) - &sq.h(m2, n)?;
                ax7.zero(|| format!("h({m} + {m2}, {n})"), &lq.normal_form(&res)?);
            }
            for n2 in ns {
                let res = &(&sq.h(m, &(n + n2))? - &h) - &sq.h(m, n2)?;
                ax8.zero(|| format!("h({m}, {n} + {n2})"), &lq.normal_form(&res)?);
            }
        }
    }

    let mut ax9 = Check::new("9").with_note("linear over scalars and over the base");
    let (mring, nring, lring) = (mq.ring(), nq.ring(), lq.ring());
    let sc = scalars(lring);
    for m in ms {
        for n in ns {
            let h = sq.h(m, n)?;
            for (k, kl) in &sc {
                let km = &kl.transfer_by_name(mring)? * m;
                let kn = &kl.transfer_by_name(nring)? * n;
                let kh = kl * &h;
                ax9.zero(|| format!("h({k}*{m}, {n})"), &lq.normal_form(&(&sq.h(&km, n)? - &kh))?);
                ax9.zero(|| format!("h({m}, {k}*{n})"), &lq.normal_form(&(&sq.h(m, &kn)? - &kh))?);
            }
            for p in &base_vars {
                let ph = sq.on_l(p, &h);
                let pm = &sq.act_m.apply(p) * m;
                let pn = &sq.act_n.apply(p) * n;
                ax9.zero(|| format!("h({p}.{m}, {n})"), &lq.normal_form(&(&sq.h(&pm, n)? - &ph))?);
                ax9.zero(|| format!("h({m}, {p}.{n})"), &lq.normal_form(&(&sq.h(m, &pn)? - &ph))?);
            }
        }
    }

    let mut ax10 = Check::new("10").with_note("h(m m', n) = m'.h(m, n) = m.h(m', n), and the same in n");
    let mut printed = Check::info("10-printed", "variant m.h(m', n) = m'.h(m', n), evaluated only");
    let mut printed_holds = true;
    for n in ns {
        for m in ms {
            let h = sq.h(m, n)?;
            for m2 in ms {
                let a = sq.on_l(&sq.mu.apply(m2), &h);
                let b = sq.on_l(&sq.mu.apply(m), &sq.h(m2, n)?);
                let c = sq.h(&(&sq.act_m.apply(&sq.mu.apply(m)) * m2), n)?;
                ax10.zero(|| format!("{m2}.h({m}, {n}) vs {m}.h({m2}, {n})"), &lq.normal_form(&(&a - &b))?);
                ax10.zero(|| format!("h({m}*{m2}, {n}) vs {m2}.h({m}, {n})"), &lq.normal_form(&(&c - &a))?);
                let pb = sq.on_l(&sq.mu.apply(m2), &sq.h(m2, n)?);
                printed.checked += 1;
                printed_holds &= lq.normal_form(&(&b - &pb))?.is_zero();
            }
            for n2 in ns {
                let a = sq.on_l(&sq.mup.apply(n2), &h);
                let b = sq.on_l(&sq.mup.apply(n), &sq.h(m, n2)?);
                let c = sq.h(m, &(&sq.act_n.apply(&sq.mup.apply(n)) * n2))?;
                ax10.zero(|| format!("{n2}.h({m}, {n}) vs {n}.h({m}, {n2})"), &lq.normal_form(&(&a - &b))?);
                ax10.zero(|| format!("h({m}, {n}*{n2}) vs {n2}.h({m}, {n})"), &lq.normal_form(&(&c - &a))?);
            }
        }
    }
    printed.note = format!(
        "{}: {}",
        printed.note,
        if printed_holds { "holds on these instances" } else { "fails on some instance" }
    );
    debug_assert_eq!(printed.status, Status::Info);

    Ok(AxiomReport {
        subject: subject.to_string(),
        checks: vec![wd, ax1, ax2, ax3, ax4, ax5, ax6, ax7, ax8, ax9, ax10, printed],
    })
}

/// `∂: R^+[S2] -> R`, no relations.
pub fn free_precrossed(sk: &Skeleton2) -> Result<CrossedModuleRep> {
    let gens: Vec<Polynomial> = (0..sk.n_s2()).map(|i| sk.s2_var(i)).collect();
    let budget = sk.budget();
    Ok(CrossedModuleRep {
        top: Subquotient::ideal(sk.ideal(1, gens.clone())?),
        base: Subquotient::whole(sk.ring(0), budget),
        boundary: sk.face(1, 1).clone(),
        action: sk.degeneracy(0, 0).clone(),
        gens,
    })
}

/// Quotient by the Peiffer ideal `(c c' - ∂(c).c')` over generator pairs.
pub fn peiffer_quotient(pre: &CrossedModuleRep) -> Result<CrossedModuleRep> {
    let mut rels: Vec<Polynomial> = pre.top.relations().gens().to_vec();
    for c in &pre.gens {
        let dc = pre.boundary.apply(c);
        for c2 in &pre.gens {
            rels.push(&(c * c2) - &pre.act(&dc, c2));
        }
    }
    let budget = pre.top.relations().budget();
    let mut out = pre.clone();
    out.top = Subquotient::new(pre.top.numerator().clone(), Ideal::new(pre.top.ring(), rels)?.with_budget(budget))?;
    Ok(out)
}

/// The free crossed module on `names -> images` over `base`: the
/// augmentation ideal of `base[names]` modulo `(y_i y_j - ∂(y_i) y_j)`.
pub fn free_crossed_on(base: &Subquotient, names: &[String], images: &[Polynomial]) -> Result<CrossedModuleRep> {
    let b = base.ring();
    if names.len() != images.len() {
        return Err(CoreError::Invalid("one image per generator".into()));
    }
    let budget = base.relations().budget();
    let mut all = b.names().to_vec();
    let mut weights = b.weights().to_vec();
    for (n, im) in names.iter().zip(images) {
        if all.contains(n) {
            return Err(CoreError::Invalid(format!("generator `{n}` clashes with a base variable")));
        }
        all.push(n.clone());
        weights.push(im.degree().unwrap_or(0).max(1) as u32);
    }
    let ring = PolyRing::with_weights(&all, &weights, b.field(), b.order())?;
    let inc = RingHom::by_name(b, &ring)?;
    let ys: Vec<Polynomial> = (0..names.len()).map(|i| ring.var(b.nvars() + i)).collect();
    let mut imgs: Vec<Polynomial> = (0..b.nvars()).map(|v| b.var(v)).collect();
    imgs.extend(images.iter().cloned());
    let boundary = RingHom::new(&ring, b, imgs)?;
    let mut rels: Vec<Polynomial> = base.relations().gens().iter().map(|g| inc.apply(g)).collect();
    for (i, yi) in ys.iter().enumerate() {
        let di = inc.apply(&images[i]);
        for yj in &ys {
            rels.push(&(yi * yj) - &(&di * yj));
        }
    }
    Ok(CrossedModuleRep {
        top: Subquotient::new(
            Ideal::new(&ring, ys.clone())?.with_budget(budget),
            Ideal::new(&ring, rels)?.with_budget(budget),
        )?,
        base: base.clone(),
        boundary,
        action: inc,
        gens: ys,
    })
}

/// The square of ideals `I1 ∩ I2 -> I2, I1 -> E` with `h(a, b) = ab`.
pub fn ideal_square(ring: &PolyRing, i1: Vec<Polynomial>, i2: Vec<Polynomial>, budget: u64) -> Result<CrossedSquareRep> {
    let a = Ideal::new(ring, i1.clone())?.with_budget(budget);
    let b = Ideal::new(ring, i2.clone())?.with_budget(budget);
    let meet = ideal_intersect(&a, &b)?;
    let l_gens = meet.groebner_basis()?.to_vec();
    let id = RingHom::identity(ring);
    Ok(CrossedSquareRep {
        l: Subquotient::ideal(meet),
        m: Subquotient::ideal(a),
        n: Subquotient::ideal(b),
        base: Subquotient::whole(ring, budget),
        d2: id.clone(),
        d2p: id.clone(),
        mu: id.clone(),
        mup: id.clone(),
        act_l: id.clone(),
        act_m: id.clone(),
        act_n: id,
        l_gens,
        m_gens: i1,
        n_gens: i2,
        h: HRule::Product,
    })
}

/// `∂: C -> R` of the free crossed module reduced to linear form: `C` is
/// `R^n / Im d` for the Koszul map `d(e_i ∧ e_j) = t_i e_j - t_j e_i`.
#[derive(Clone, Debug)]
pub struct LinearizedCrossedModule {
    pub ring: PolyRing,
    /// `(t_1, ..., t_n)`.
    pub boundary: Vec<Polynomial>,
    /// `t_i e_j - t_j e_i` for `i < j`.
    pub relations: Vec<Vec<Polynomial>>,
    /// Weight of `e_i`.
    pub shifts: Vec<u32>,
    gen_vars: Vec<usize>,
}

impl LinearizedCrossedModule {
    pub fn rank(&self) -> usize {
        self.boundary.len()
    }

    /// A vector `(r_i)` over `R` with `c ≡ sum r_i S_i`, obtained by
    /// rewriting `S_i S_j -> t_i S_j` until every term is linear.
    pub fn representative(&self, cm: &CrossedModuleRep, c: &Polynomial) -> Result<Vec<Polynomial>> {
        let top = cm.top.ring();
        let inc = &cm.action;
        let mut todo = c.clone();
        let mut out = vec![self.ring.zero(); self.rank()];
        let to_base = RingHom::new(
            top,
            &self.ring,
            (0..top.nvars())
                .map(|v| if self.gen_vars.contains(&v) { self.ring.zero() } else { self.ring.var_named(top.name(v)).unwrap() })
                .collect(),
        )?;
        while !todo.is_zero() {
            let (m, k) = todo.terms()[0].clone();
            let term = Polynomial::monomial(top, m.clone(), k.clone());
            let hits: Vec<usize> = (0..self.rank()).filter(|&i| m.exponent(self.gen_vars[i]) > 0).collect();
            let sdeg: u16 = hits.iter().map(|&i| m.exponent(self.gen_vars[i])).sum();
            if sdeg == 0 {
                return Err(CoreError::Invalid(format!("{c} is not in the augmentation ideal")));
            }
            let i = hits[0];
            let si = top.var(self.gen_vars[i]);
            let rest = Polynomial::from_terms(top, [(m.checked_div(si.leading_monomial().unwrap()).unwrap(), k)]);
            todo = &todo - &term;
            if sdeg == 1 {
                out[i] = &out[i] + &to_base.apply(&rest);
            } else {
                todo = &todo + &(&inc.apply(&self.boundary[i]) * &rest);
            }
        }
        Ok(out)
    }
}

/// Requires the free crossed module on `S2` over `R` (or its quotient by
/// the Peiffer ideal).
pub fn linearize(cm: &CrossedModuleRep) -> Result<LinearizedCrossedModule> {
    let top = cm.top.ring();
    let base = cm.base.ring();
    let mut gen_vars = Vec::new();
    for g in &cm.gens {
        let v = (0..top.nvars())
            .find(|&v| *g == top.var(v) && base.var_index(top.name(v)).is_none())
            .ok_or_else(|| CoreError::Invalid(format!("generator {g} is not an adjoined variable")))?;
        gen_vars.push(v);
    }
    let boundary: Vec<Polynomial> = cm.gens.iter().map(|g| cm.boundary.apply(g)).collect();
    let n = boundary.len();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![base.zero(); n];
            v[j] = boundary[i].clone();
            v[i] = -&boundary[j];
            relations.push(v);
        }
    }
    let shifts = boundary.iter().map(|t| t.degree().unwrap_or(0).max(1) as u32).collect();
    Ok(LinearizedCrossedModule { ring: base.clone(), boundary, relations, shifts, gen_vars })
}

/// Value of `M(E, n)`.
#[derive(Clone, Debug)]
pub enum MObject {
    Ring(Subquotient),
    XMod(CrossedModuleRep),
    Square(CrossedSquareRep),
}

/// The crossed square `NE2/P2 -> NE1, Kbar -> E1` of a skeleton, given its
/// Moore kernels and second Peiffer ideal.
pub fn simplicial_square(sk: &Skeleton2, moore: &MooreData, p2: &Ideal) -> Result<CrossedSquareRep> {
    let e1 = sk.ring(1);
    let id = RingHom::identity(e1);
    let rho = sk.face(1, 0).then(sk.degeneracy(0, 0))?;
    Ok(CrossedSquareRep {
        l: Subquotient::new(moore.ne2.clone(), p2.clone())?,
        m: Subquotient::ideal(moore.ne1.clone()),
        n: Subquotient::ideal(moore.kbar.clone()),
        base: Subquotient::whole(e1, sk.budget()),
        d2: sk.face(2, 2).clone(),
        d2p: sk.face(2, 2).clone(),
        mu: id.clone(),
        mup: id.clone(),
        act_l: sk.degeneracy(1, 1).clone(),
        act_m: id.clone(),
        act_n: id,
        l_gens: moore.ne2.groebner_basis()?.to_vec(),
        m_gens: (0..sk.n_s2()).map(|i| sk.s2_var(i)).collect(),
        n_gens: (0..sk.n_s2()).map(|i| sk.s2_bar(i)).collect(),
        h: HRule::Simplicial { s0: sk.degeneracy(1, 0).clone(), s1: sk.degeneracy(1, 1).clone(), rho },
    })
}

/// `M(E, n)` for `n = 0, 1, 2`: the quotient ring `E0 / d1(NE1)`, the
/// crossed module `NE1 / d2(NE2) -> E0`, and the crossed square.
pub fn functor_m(sk: &Skeleton2, n: usize) -> Result<MObject> {
    let m = moore(sk)?;
    match n {
        0 => {
            let imgs = m.ne1.groebner_basis()?.iter().map(|g| sk.face(1, 1).apply(g)).collect();
            Ok(MObject::Ring(Subquotient::quotient_ring(sk.ideal(0, imgs)?)))
        }
        1 => {
            let rels = m.ne2.groebner_basis()?.iter().map(|g| sk.face(2, 2).apply(g)).collect();
            let gens = m.ne1.groebner_basis()?.to_vec();
            Ok(MObject::XMod(CrossedModuleRep {
                top: Subquotient::new(m.ne1.clone(), sk.ideal(1, rels)?)?,
                base: Subquotient::whole(sk.ring(0), sk.budget()),
                boundary: sk.face(1, 1).clone(),
                action: sk.degeneracy(0, 0).clone(),
                gens,
            }))
        }
        2 => {
            let p2 = peiffer_p2(sk, &m, P2Route::CFamilies)?;
            Ok(MObject::Square(simplicial_square(sk, &m, &p2)?))
        }
        _ => Err(CoreError::Invalid(format!("M(-, {n}) is only built for n <= 2"))),
    }
}

impl MObject {
    pub fn same_presentation(&self, other: &MObject) -> Result<bool> {
        match (self, other) {
            (MObject::Ring(a), MObject::Ring(b)) => a.same_presentation(b),
            (MObject::XMod(a), MObject::XMod(b)) => a.same_presentation(b),
            (MObject::Square(a), MObject::Square(b)) => a.same_presentation(b),
            _ => Ok(false),
        }
    }
}
