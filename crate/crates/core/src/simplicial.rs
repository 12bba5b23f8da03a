//! Levels 0 to 3 of the 2-skeletal free simplicial algebra, its face and
//! degeneracy maps, Moore kernels, and the two Peiffer ideals.
//!
//! Generators are named by their degeneracy word: `s1s0_S` is `s_1 s_0 S`.
//! Only face images of the adjoined generators themselves are prescribed
//! (`d_1 S = t`, `d_2 T = f3`, every other face of a generator is 0); all
//! other images follow from the simplicial identities by pushing `d_i`
//! through the word.

use xsquare_algebra::{
    hom_kernel, ideal_intersect, parse_poly, Field, Ideal, MonomialOrder, PolyRing, Polynomial, RingHom,
};

use crate::data::{ConstructionData, DataError};
use crate::{CoreError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenSet {
    S2,
    S3,
}

impl GenSet {
    /// Simplicial dimension at which the generator is adjoined.
    fn dim(self) -> usize {
        match self {
            GenSet::S2 => 1,
            GenSet::S3 => 2,
        }
    }
}

/// Where a variable of `E_n` comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Base,
    Gen { word: Vec<usize>, set: GenSet, index: usize },
}

#[derive(Clone, Debug)]
pub struct Skeleton2 {
    data: ConstructionData,
    field: Field,
    budget: u64,
    rings: Vec<PolyRing>,
    origins: Vec<Vec<Origin>>,
    faces: Vec<Vec<RingHom>>,
    degens: Vec<Vec<RingHom>>,
    t: Vec<Polynomial>,
    f3: Vec<Polynomial>,
}

/// Descending words of length `len` over `0..level`, in ascending tuple order.
fn words(level: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, level: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            let mut w = cur.clone();
            w.reverse();
            out.push(w);
            return;
        }
        for j in start..level {
            cur.push(j);
            rec(j + 1, level, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, level, len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn word_name(word: &[usize], base: &str) -> String {
    if word.is_empty() {
        return base.to_string();
    }
    let mut s: String = word.iter().map(|j| format!("s{j}")).collect();
    s.push('_');
    s.push_str(base);
    s
}

/// Canonical form of `s_j s_w` using `s_i s_j = s_{j+1} s_i` for `i <= j`.
fn norm_insert(j: usize, word: &[usize]) -> Vec<usize> {
    match word.first() {
        None => vec![j],
        Some(&w0) if j > w0 => {
            let mut out = vec![j];
            out.extend_from_slice(word);
            out
        }
        Some(&w0) => {
            let mut out = vec![w0 + 1];
            out.extend(norm_insert(j, &word[1..]));
            out
        }
    }
}

fn max_weight(p: &Polynomial) -> u32 {
    p.degree().unwrap_or(0).max(1) as u32
}

impl Skeleton2 {
    /// Builds all four levels. Variable weights make every structure map
    /// graded: R variables weigh 1, an S2 generator the degree of its image,
    /// an S3 generator the weighted degree of its image.
    pub fn build(data: &ConstructionData, order: MonomialOrder, budget: u64) -> Result<Skeleton2> {
        data.check_names()?;
        let field = data.field.to_field()?;
        let r0 = PolyRing::with_weights(&data.s1, &vec![1; data.s1.len()], field, order)?;
        let mut t = Vec::new();
        for g in &data.s2 {
            let p = parse_poly(&g.image, &r0)
                .map_err(|source| DataError::Image { set: "S2", name: g.name.clone(), source })?;
            t.push(p);
        }
        let w2: Vec<u32> = t.iter().map(max_weight).collect();

        let mut names1: Vec<String> = data.s1.clone();
        names1.extend(data.s2.iter().map(|g| g.name.clone()));
        let mut weights1 = vec![1; data.s1.len()];
        weights1.extend(&w2);
        let r1 = PolyRing::with_weights(&names1, &weights1, field, order)?;
        let n1 = data.s1.len();
        let mut boundary_images: Vec<Polynomial> = (0..n1).map(|i| r0.var(i)).collect();
        boundary_images.extend(t.iter().cloned());
        let boundary = RingHom::new(&r1, &r0, boundary_images)?;
        let mut f3 = Vec::new();
        for g in &data.s3 {
            let p = parse_poly(&g.image, &r1)
                .map_err(|source| DataError::Image { set: "S3", name: g.name.clone(), source })?;
            if p.terms().iter().any(|(m, _)| (n1..r1.nvars()).all(|v| m.exponent(v) == 0)) {
                return Err(DataError::NotAugmented { name: g.name.clone(), image: p.to_string() }.into());
            }
            let b = boundary.apply(&p);
            if !b.is_zero() {
                return Err(DataError::NonzeroBoundary {
                    name: g.name.clone(),
                    image: p.to_string(),
                    boundary: b.to_string(),
                }
                .into());
            }
            f3.push(p);
        }
        let w3: Vec<u32> = f3.iter().map(max_weight).collect();

        let mut rings = Vec::new();
        let mut origins = Vec::new();
        for level in 0..4usize {
            let mut names: Vec<String> = data.s1.clone();
            let mut weights = vec![1u32; n1];
            let mut orig = vec![Origin::Base; n1];
            for (set, gens, ws) in [(GenSet::S2, &data.s2, &w2), (GenSet::S3, &data.s3, &w3)] {
                if level < set.dim() {
                    continue;
                }
                for w in words(level, level - set.dim()) {
                    for (k, g) in gens.iter().enumerate() {
                        names.push(word_name(&w, &g.name));
                        weights.push(ws[k]);
                        orig.push(Origin::Gen { word: w.clone(), set, index: k });
                    }
                }
            }
            rings.push(PolyRing::with_weights(&names, &weights, field, order)?);
            origins.push(orig);
        }

        let mut sk = Skeleton2 {
            data: data.clone(),
            field,
            budget,
            rings,
            origins,
            faces: vec![Vec::new(); 4],
            degens: vec![Vec::new(); 3],
            t,
            f3,
        };
        for level in 0..3 {
            let mut maps = Vec::new();
            for j in 0..=level {
                let imgs = (0..sk.rings[level].nvars())
                    .map(|v| match &sk.origins[level][v] {
                        Origin::Base => sk.rings[level + 1].var(v),
                        Origin::Gen { word, set, index } => sk.gen_var(level + 1, &norm_insert(j, word), *set, *index),
                    })
                    .collect();
                maps.push(RingHom::new(&sk.rings[level], &sk.rings[level + 1], imgs)?);
            }
            sk.degens[level] = maps;
        }
        for level in 1..4 {
            let mut maps = Vec::new();
            for i in 0..=level {
                let imgs = (0..sk.rings[level].nvars())
                    .map(|v| match &sk.origins[level][v] {
                        Origin::Base => sk.rings[level - 1].var(v),
                        Origin::Gen { word, set, index } => sk.face_of_gen(i, level, word, *set, *index),
                    })
                    .collect();
                maps.push(RingHom::new(&sk.rings[level], &sk.rings[level - 1], imgs)?);
            }
            sk.faces[level] = maps;
        }
        Ok(sk)
    }

    fn gen_var(&self, level: usize, word: &[usize], set: GenSet, index: usize) -> Polynomial {
        let base = match set {
            GenSet::S2 => &self.data.s2[index].name,
            GenSet::S3 => &self.data.s3[index].name,
        };
        self.rings[level]
            .var_named(&word_name(word, base))
            .unwrap_or_else(|| panic!("generator {} missing at level {level}", word_name(word, base)))
    }

    /// `d_i (s_word g)`: push the face through the word with
    /// `d_i s_j = s_{j-1} d_i (i < j)`, `= id (i = j, j+1)`, `= s_j d_{i-1} (i > j+1)`.
    fn face_of_gen(&self, i: usize, level: usize, word: &[usize], set: GenSet, index: usize) -> Polynomial {
        let mut pre = Vec::new();
        let mut cur = Some(i);
        for &j in word {
            match cur {
                None => pre.push(j),
                Some(c) if c < j => pre.push(j - 1),
                Some(c) if c == j || c == j + 1 => cur = None,
                Some(c) => {
                    pre.push(j);
                    cur = Some(c - 1);
                }
            }
        }
        let Some(c) = cur else {
            return self.gen_var(level - 1, &pre, set, index);
        };
        let mut l = set.dim() - 1;
        let mut p = match set {
            GenSet::S2 if c == 1 => self.t[index].clone(),
            GenSet::S3 if c == 2 => self.f3[index].clone(),
            _ => self.rings[l].zero(),
        };
        for &j in pre.iter().rev() {
            p = self.degens[l][j].apply(&p);
            l += 1;
        }
        debug_assert_eq!(l, level - 1);
        p
    }

    pub fn data(&self) -> &ConstructionData {
        &self.data
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn order(&self) -> MonomialOrder {
        self.rings[0].order()
    }

    /// `E_n` for `n = 0..=3`.
    pub fn ring(&self, n: usize) -> &PolyRing {
        &self.rings[n]
    }

    pub fn origins(&self, n: usize) -> &[Origin] {
        &self.origins[n]
    }

    /// `d_i : E_n -> E_{n-1}`.
    pub fn face(&self, n: usize, i: usize) -> &RingHom {
        &self.faces[n][i]
    }

    /// `s_j : E_n -> E_{n+1}`.
    pub fn degeneracy(&self, n: usize, j: usize) -> &RingHom {
        &self.degens[n][j]
    }

    /// `t_i = d_1 S_i` in `E_0`.
    pub fn t(&self) -> &[Polynomial] {
        &self.t
    }

    /// `t_i` viewed in `E_1`.
    pub fn t_in_e1(&self) -> Vec<Polynomial> {
        self.t.iter().map(|p| self.degens[0][0].apply(p)).collect()
    }

    /// The S3 images in `E_1`.
    pub fn f3(&self) -> &[Polynomial] {
        &self.f3
    }

    pub fn n_s2(&self) -> usize {
        self.data.s2.len()
    }

    pub fn n_s3(&self) -> usize {
        self.data.s3.len()
    }

    /// `S_i` in `E_1`.
    pub fn s2_var(&self, i: usize) -> Polynomial {
        self.rings[1].var(self.data.s1.len() + i)
    }

    /// `S'_j` in `E_2`.
    pub fn s3_var(&self, j: usize) -> Polynomial {
        self.gen_var(2, &[], GenSet::S3, j)
    }

    /// `S_i - t_i`, the generators of `Ker d_1` in `E_1`.
    pub fn s2_bar(&self, i: usize) -> Polynomial {
        &self.s2_var(i) - &self.degens[0][0].apply(&self.t[i])
    }

    /// `m - s_0 d_1 m`: the bijection `Ker d_0 -> Ker d_1`.
    pub fn bar(&self, m: &Polynomial) -> Polynomial {
        m - &self.degens[0][0].apply(&self.faces[1][1].apply(m))
    }

    /// `n - s_0 d_0 n`: the inverse bijection `Ker d_1 -> Ker d_0`.
    pub fn unbar(&self, n: &Polynomial) -> Polynomial {
        n - &self.degens[0][0].apply(&self.faces[1][0].apply(n))
    }

    /// The same data truncated to the `i`-skeleton, built with the same
    /// order and budget.
    pub fn truncated(&self, i: usize) -> Result<Skeleton2> {
        Skeleton2::build(&self.data.truncate(i), self.order(), self.budget)
    }

    pub fn ideal(&self, n: usize, gens: Vec<Polynomial>) -> Result<Ideal> {
        Ok(Ideal::new(&self.rings[n], gens)?.with_budget(self.budget))
    }

    /// Every simplicial identity through level 3, checked as equality of
    /// ring maps on generators.
    pub fn check_identities(&self) -> Vec<IdentityCheck> {
        let mut out = Vec::new();
        let compose = |f: &RingHom, g: &RingHom| f.then(g).expect("composable maps");
        for n in 2..4 {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = compose(&self.faces[n][j], &self.faces[n - 1][i]);
                    let rhs = compose(&self.faces[n][i], &self.faces[n - 1][j - 1]);
                    out.push(IdentityCheck {
                        identity: format!("d{i} d{j} = d{} d{i} on E{n}", j - 1),
                        holds: lhs.agrees_with(&rhs),
                    });
                }
            }
        }
        for n in 0..3 {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = compose(&self.degens[n][j], &self.faces[n + 1][i]);
                    let (rhs, text) = if i < j {
                        (compose(&self.faces[n][i], &self.degens[n - 1][j - 1]), format!("s{} d{i}", j - 1))
                    } else if i == j || i == j + 1 {
                        (RingHom::identity(&self.rings[n]), "id".to_string())
                    } else {
                        (compose(&self.faces[n][i - 1], &self.degens[n - 1][j]), format!("s{j} d{}", i - 1))
                    };
                    out.push(IdentityCheck {
                        identity: format!("d{i} s{j} = {text} on E{n}"),
                        holds: lhs.agrees_with(&rhs),
                    });
                }
            }
        }
        for n in 0..2 {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = compose(&self.degens[n][j], &self.degens[n + 1][i]);
                    let rhs = compose(&self.degens[n][i], &self.degens[n + 1][j + 1]);
                    out.push(IdentityCheck {
                        identity: format!("s{i} s{j} = s{} s{i} on E{n}", j + 1),
                        holds: lhs.agrees_with(&rhs),
                    });
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: String,
    pub holds: bool,
}

/// Moore kernels of the skeleton.
#[derive(Clone, Debug)]
pub struct MooreData {
    /// `Ker d_0` in `E_1`.
    pub ne1: Ideal,
    /// `Ker d_1` in `E_1`.
    pub kbar: Ideal,
    /// `Ker d_0 ∩ Ker d_1` in `E_2`.
    pub ne2: Ideal,
    /// Ideal of `E_3` generated by its (all degenerate) generators.
    pub degenerate3: Ideal,
}

pub fn moore(sk: &Skeleton2) -> Result<MooreData> {
    let b = sk.budget();
    let ne1 = hom_kernel(sk.face(1, 0), b)?;
    let kbar = hom_kernel(sk.face(1, 1), b)?;
    let k0 = hom_kernel(sk.face(2, 0), b)?;
    let k1 = hom_kernel(sk.face(2, 1), b)?;
    let ne2 = ideal_intersect(&k0, &k1)?;
    let e3 = sk.ring(3);
    let gens = (0..e3.nvars())
        .filter(|&v| sk.origins(3)[v] != Origin::Base)
        .map(|v| e3.var(v))
        .collect();
    let degenerate3 = sk.ideal(3, gens)?;
    Ok(MooreData { ne1, kbar, ne2, degenerate3 })
}

impl MooreData {
    /// Compares the computed kernels with `(S_1..S_n)` and `(S_i - t_i)`.
    pub fn explicit_forms_agree(&self, sk: &Skeleton2) -> Result<(bool, bool)> {
        let s = sk.ideal(1, (0..sk.n_s2()).map(|i| sk.s2_var(i)).collect())?;
        let sbar = sk.ideal(1, (0..sk.n_s2()).map(|i| sk.s2_bar(i)).collect())?;
        Ok((self.ne1.equals(&s)?, self.kbar.equals(&sbar)?))
    }
}

/// `P_1`, generated by `S_i S_j - t_i S_j` for all ordered pairs.
pub fn peiffer_p1(sk: &Skeleton2) -> Result<Ideal> {
    let t = sk.t_in_e1();
    let mut gens = Vec::new();
    for i in 0..sk.n_s2() {
        for j in 0..sk.n_s2() {
            gens.push(&(&sk.s2_var(i) - &t[i]) * &sk.s2_var(j));
        }
    }
    sk.ideal(1, gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P2Route {
    CFamilies,
    ExplicitList,
}

pub fn peiffer_p2(sk: &Skeleton2, moore: &MooreData, route: P2Route) -> Result<Ideal> {
    let gens = match route {
        P2Route::CFamilies => {
            let xs = moore.ne1.groebner_basis()?.to_vec();
            let ys = moore.ne2.groebner_basis()?.to_vec();
            c_family_elements(sk, &xs, &ys)
        }
        P2Route::ExplicitList => explicit_peiffer_elements(sk),
    };
    sk.ideal(2, gens)
}

/// `d_3` of the six families `C_{(1,0)(2)}, ..., C_{(2)(1)}`: the first three
/// with `x` over `xs` (in `E_1`) and `y` over `ys` (in `E_2`), the last three
/// with both arguments over `ys`. Zeros and repeats are dropped.
pub fn c_family_elements(sk: &Skeleton2, xs: &[Polynomial], ys: &[Polynomial]) -> Vec<Polynomial> {
    let s = |n: usize, j: usize, p: &Polynomial| sk.degeneracy(n, j).apply(p);
    let d3 = sk.face(3, 3);
    let mut out: Vec<Polynomial> = Vec::new();
    let mut push = |p: Polynomial| {
        let q = d3.apply(&p);
        if !q.is_zero() && !out.contains(&q) {
            out.push(q);
        }
    };
    let sy: Vec<[Polynomial; 3]> = ys.iter().map(|y| [s(2, 0, y), s(2, 1, y), s(2, 2, y)]).collect();
    for x in xs {
        let s1s0 = s(2, 1, &s(1, 0, x));
        let s2s0 = s(2, 2, &s(1, 0, x));
        let s2s1 = s(2, 2, &s(1, 1, x));
        for [s0y, s1y, s2y] in &sy {
            push(&(&s1s0 - &s2s0) * s2y);
            push(&(&s2s0 - &s2s1) * &(s1y - s2y));
            push(&s2s1 * &(&(s0y - s1y) + s2y));
        }
    }
    for (x, [_, s1x, s2x]) in ys.iter().zip(&sy) {
        for (y, [s0y, s1y, s2y]) in ys.iter().zip(&sy) {
            push(&(s1x * &(s0y - s1y)) + &s(2, 2, &(x * y)));
            push(s2x * s0y);
            push(s2x * &(s1y - s2y));
        }
    }
    out
}

/// The six families of second order Peiffer elements in `E_2`, with `S_i`
/// over S2 and `S'_j` over S3.
pub fn explicit_peiffer_elements(sk: &Skeleton2) -> Vec<Polynomial> {
    let a = |i: usize| sk.degeneracy(1, 0).apply(&sk.s2_var(i));
    let b = |i: usize| sk.degeneracy(1, 1).apply(&sk.s2_var(i));
    let d2 = sk.face(2, 2);
    let s0 = sk.degeneracy(1, 0);
    let s1 = sk.degeneracy(1, 1);
    let mut out = Vec::new();
    for i in 0..sk.n_s2() {
        // s1 s0 d1 S_i lands on t_i
        let s1s0d1 = s1.apply(&sk.degeneracy(0, 0).apply(&sk.face(1, 1).apply(&sk.s2_var(i))));
        for j in 0..sk.n_s3() {
            let tj = sk.s3_var(j);
            let d2t = d2.apply(&tj);
            let (s1d2, s0d2) = (s1.apply(&d2t), s0.apply(&d2t));
            out.push(&(&s1s0d1 - &a(i)) * &tj);
            out.push(&(&a(i) - &b(i)) * &(&s1d2 - &tj));
            out.push(&b(i) * &(&(&s0d2 - &s1d2) + &tj));
        }
    }
    for i in 0..sk.n_s3() {
        let ti = sk.s3_var(i);
        let d2i = d2.apply(&ti);
        for j in 0..sk.n_s3() {
            let tj = sk.s3_var(j);
            let d2j = d2.apply(&tj);
            let (s1j, s0j) = (s1.apply(&d2j), s0.apply(&d2j));
            out.push(&ti * &(&s1j - &tj));
            out.push(&ti * &(&(&tj + &s0j) - &s1j));
            out.push(&(&(&s0.apply(&d2i) - &s1.apply(&d2i)) + &ti) * &(&s1j - &tj));
        }
    }
    out.retain(|p| !p.is_zero());
    out
}

/// The c-family elements of the 1-skeleton (S3 dropped), moved into `E_2`.
pub fn s3_free_instances(sk: &Skeleton2) -> Result<Vec<Polynomial>> {
    let one = sk.truncated(1)?;
    let m = moore(&one)?;
    let xs = m.ne1.groebner_basis()?.to_vec();
    let ys = m.ne2.groebner_basis()?.to_vec();
    c_family_elements(&one, &xs, &ys)
        .iter()
        .map(|p| p.transfer_by_name(sk.ring(2)).map_err(CoreError::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use xsquare_algebra::DEFAULT_BUDGET;

    fn data(json: &str) -> ConstructionData {
        ConstructionData::from_json(json).unwrap()
    }

    fn fixture_a() -> ConstructionData {
        data(r#"{"field":"Q","S1":["x"],"S2":[{"name":"S","image":"x^2"}]}"#)
    }

    fn fixture_c() -> ConstructionData {
        data(
            r#"{"field":"Q","S1":["x","y"],"S2":[{"name":"S1","image":"x^2"},{"name":"S2","image":"x*y"}],
                "S3":[{"name":"T","image":"y*S1 - x*S2"}]}"#,
        )
    }

    fn build(d: &ConstructionData) -> Skeleton2 {
        Skeleton2::build(d, MonomialOrder::DegRevLex, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn word_helpers() {
        assert_eq!(words(3, 2), vec![vec![1, 0], vec![2, 0], vec![2, 1]]);
        assert_eq!(words(2, 0), vec![Vec::<usize>::new()]);
        assert_eq!(norm_insert(0, &[0]), vec![1, 0]);
        assert_eq!(norm_insert(0, &[1]), vec![2, 0]);
        assert_eq!(norm_insert(2, &[1]), vec![2, 1]);
        assert_eq!(word_name(&[2, 0], "S"), "s2s0_S");
    }

    #[test]
    fn ring_names_follow_the_convention() {
        let a = build(&fixture_a());
        assert_eq!(a.ring(1).names(), ["x", "S"]);
        assert_eq!(a.ring(2).names(), ["x", "s0_S", "s1_S"]);
        let c = build(&fixture_c());
        assert_eq!(c.ring(2).names(), ["x", "y", "s0_S1", "s0_S2", "s1_S1", "s1_S2", "T"]);
        assert_eq!(
            c.ring(3).names(),
            ["x", "y", "s1s0_S1", "s1s0_S2", "s2s0_S1", "s2s0_S2", "s2s1_S1", "s2s1_S2", "s0_T", "s1_T", "s2_T"]
        );
        assert_eq!(c.ring(2).weights(), [1, 1, 2, 2, 2, 2, 3]);
    }

    #[test]
    fn prescribed_face_images() {
        let c = build(&fixture_c());
        let img = |n: usize, i: usize, v: &str| c.face(n, i).apply(&c.ring(n).var_named(v).unwrap()).to_string();
        assert_eq!(img(1, 0, "S1"), "0");
        assert_eq!(img(1, 1, "S1"), "x^2");
        assert_eq!(img(2, 0, "s0_S1"), "S1");
        assert_eq!(img(2, 2, "s0_S1"), "x^2");
        assert_eq!(img(2, 0, "s1_S1"), "0");
        assert_eq!(img(2, 2, "s1_S2"), "S2");
        assert_eq!(img(2, 2, "T"), "y*S1 - x*S2");
        assert_eq!(img(2, 1, "T"), "0");
        assert_eq!(img(3, 3, "s1s0_S1"), "x^2");
        assert_eq!(img(3, 0, "s2s0_S1"), "s1_S1");
        assert_eq!(img(3, 3, "s0_T"), "y*s0_S1 - x*s0_S2");
        assert_eq!(img(3, 2, "s2_T"), "T");
    }

    #[test]
    fn simplicial_identities_hold() {
        for d in [fixture_a(), fixture_c(), fixture_c().truncate(0)] {
            let sk = build(&d);
            let checks = sk.check_identities();
            assert!(checks.len() > 30);
            for c in checks {
                assert!(c.holds, "{}", c.identity);
            }
        }
    }

    #[test]
    fn empty_skeleton_is_constant() {
        let sk = build(&fixture_c().truncate(0));
        for n in 1..4 {
            assert_eq!(sk.ring(n), sk.ring(0));
            for i in 0..=n {
                assert!(sk.face(n, i).agrees_with(&RingHom::identity(sk.ring(0))));
            }
        }
        let m = moore(&sk).unwrap();
        assert!(m.ne1.is_zero() && m.ne2.is_zero());
        assert!(peiffer_p1(&sk).unwrap().is_zero());
        assert!(peiffer_p2(&sk, &m, P2Route::CFamilies).unwrap().is_zero());
    }

    #[test]
    fn moore_kernels_of_fixture_a() {
        let sk = build(&fixture_a());
        let m = moore(&sk).unwrap();
        let strs = |i: &Ideal| i.groebner_basis().unwrap().iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(strs(&m.ne1), ["S"]);
        assert_eq!(strs(&m.kbar), ["x^2 - S"]);
        assert_eq!(m.explicit_forms_agree(&sk).unwrap(), (true, true));
        assert_eq!(strs(&peiffer_p1(&sk).unwrap()), ["x^2*S - S^2"]);
    }

    #[test]
    fn validation_errors() {
        let bad = data(
            r#"{"field":"Q","S1":["x","y"],"S2":[{"name":"S1","image":"x^2"}],"S3":[{"name":"T","image":"y*S1"}]}"#,
        );
        let e = Skeleton2::build(&bad, MonomialOrder::DegRevLex, DEFAULT_BUDGET).unwrap_err();
        assert!(matches!(e, CoreError::Data(DataError::NonzeroBoundary { .. })), "{e}");
        let bad = data(r#"{"field":"Q","S1":["x"],"S2":[{"name":"S","image":"x^2"}],"S3":[{"name":"T","image":"x"}]}"#);
        assert!(matches!(
            Skeleton2::build(&bad, MonomialOrder::DegRevLex, DEFAULT_BUDGET),
            Err(CoreError::Data(DataError::NotAugmented { .. }))
        ));
        let bad = data(r#"{"field":"Q","S1":["x"],"S2":[{"name":"S","image":"z"}]}"#);
        assert!(matches!(
            Skeleton2::build(&bad, MonomialOrder::DegRevLex, DEFAULT_BUDGET),
            Err(CoreError::Data(DataError::Image { .. }))
        ));
    }

    #[test]
    fn explicit_list_contains_the_first_family() {
        let sk = build(&fixture_c());
        let e2 = sk.ring(2);
        let expect = parse_poly("(x^2 - s0_S1)*T", e2).unwrap();
        let list = explicit_peiffer_elements(&sk);
        assert!(list.contains(&expect));
        assert_eq!(list.len(), 9);
    }
}
