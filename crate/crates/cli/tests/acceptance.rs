//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the
//! numbers behind it. Reference values come from the brute-force oracle,
//! which never calls the Gröbner engine.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use xsquare::homotopy::{aq_h2, pi1, pi2, H2Route};
use xsquare::jobs::{p2_routes, stability};
use xsquare::simplicial::moore;
use xsquare::tensor_coprod::{assemble_l, compare_corner};
use xsquare::{compare_xy, peiffer_p1, peiffer_p2, verify_report, ConstructionData, P2Route, Skeleton2};
use xsquare_algebra::poly::monomials_of_degree;
use xsquare_algebra::{parse_poly, GradedDims, Ideal, MonomialOrder, Polynomial, DEFAULT_BUDGET};
use xsquare_oracle::{hom_columns, image, joint_kernel, macaulay_piece, submodule_piece, DegreeBasis};

/// Per-ideal time limit for criterion 1.
const GB_LIMIT: Duration = Duration::from_secs(10);
/// Per-fixture time limit for criterion 3.
const CORNER_LIMIT: Duration = Duration::from_secs(60);

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

fn data(name: &str) -> ConstructionData {
    ConstructionData::from_json(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

fn skeleton(name: &str) -> Skeleton2 {
    Skeleton2::build(&data(name), MonomialOrder::DegRevLex, DEFAULT_BUDGET).unwrap()
}

fn cumulative(graded: &[u64]) -> Vec<u64> {
    GradedDims::from_graded(graded).dims
}

/// The normal form map of `ideal` in degree `d` against the oracle piece:
/// `m - NF(m)` lies in `I_d` for every monomial `m`, and the standard
/// monomials number `dim R_d - dim I_d`.
fn normal_forms_agree(ideal: &Ideal, truth: &[Polynomial], d: u64, oracle_dim: Option<usize>) -> Result<(), String> {
    let ring = ideal.ring();
    let basis = DegreeBasis::ring_piece(ring, d);
    let piece = macaulay_piece(ring, truth, d);
    if let Some(k) = oracle_dim {
        if k != piece.dim() {
            return Err(format!("degree {d}: generators span {} but the oracle piece has {k}", piece.dim()));
        }
    }
    let one = ring.field().one();
    let mut standard = 0;
    for m in monomials_of_degree(ring.weights(), d) {
        let p = Polynomial::monomial(ring, m, one.clone());
        let nf = ideal.normal_form(&p).map_err(|e| e.to_string())?;
        if nf == p {
            standard += 1;
        }
        let diff = &p - &nf;
        let Some(c) = basis.try_coords(&[diff.clone()]) else {
            return Err(format!("degree {d}: NF({p}) = {nf} leaves the degree"));
        };
        if !piece.contains(&c) {
            return Err(format!("degree {d}: {p} - NF = {diff} is not in the ideal"));
        }
    }
    if standard + piece.dim() != basis.dim() {
        return Err(format!("degree {d}: {standard} standard monomials, oracle codimension {}", basis.dim() - piece.dim()));
    }
    Ok(())
}

fn criterion_1() -> Result<String, String> {
    let mut notes = Vec::new();
    for f in ["a", "b", "c"] {
        let sk = skeleton(f);
        let e1 = sk.ring(1);
        let mut p1_gens = Vec::new();
        for g in &data(f).s2 {
            let t = parse_poly(&g.image, e1).unwrap();
            let s = e1.var_named(&g.name).unwrap();
            for h in &data(f).s2 {
                let s2 = e1.var_named(&h.name).unwrap();
                p1_gens.push(&(&s - &t) * &s2);
            }
        }
        let timed = |f: &mut dyn FnMut() -> Result<(), String>| -> Result<Duration, String> {
            let start = Instant::now();
            f()?;
            Ok(start.elapsed())
        };
        let mut mo = None;
        let t_ne2 = timed(&mut || {
            let m = moore(&sk).map_err(|e| e.to_string())?;
            m.ne2.groebner_basis().map_err(|e| e.to_string())?;
            mo = Some(m);
            Ok(())
        })?;
        let mo = mo.unwrap();
        let mut p1 = None;
        let t_p1 = timed(&mut || {
            let i = peiffer_p1(&sk).map_err(|e| e.to_string())?;
            i.groebner_basis().map_err(|e| e.to_string())?;
            p1 = Some(i);
            Ok(())
        })?;
        let p1 = p1.unwrap();
        let mut p2 = None;
        let t_p2 = timed(&mut || {
            let i = peiffer_p2(&sk, &mo, P2Route::CFamilies).map_err(|e| e.to_string())?;
            i.groebner_basis().map_err(|e| e.to_string())?;
            p2 = Some(i);
            Ok(())
        })?;
        let p2 = p2.unwrap();
        let slowest = t_ne2.max(t_p1).max(t_p2);
        if slowest > GB_LIMIT {
            return Err(format!("fixture {f}: slowest basis took {slowest:?}"));
        }
        let ne2_gens = mo.ne2.gens().to_vec();
        for d in 0..=6 {
            normal_forms_agree(&p1, &p1_gens, d, None).map_err(|e| format!("{f} P1 {e}"))?;
            normal_forms_agree(&p2, p2.gens(), d, None).map_err(|e| format!("{f} P2 {e}"))?;
            let (_, k) = joint_kernel(&[sk.face(2, 0), sk.face(2, 1)], d);
            normal_forms_agree(&mo.ne2, &ne2_gens, d, Some(k.dim())).map_err(|e| format!("{f} NE2 {e}"))?;
        }
        notes.push(format!("{f} slowest {:.2}s", slowest.as_secs_f64()));
    }
    Ok(format!("P1, P2, NE2 normal forms match the Macaulay oracle through degree 6 ({})", notes.join(", ")))
}

fn criterion_2() -> Result<String, String> {
    let mut counts = Vec::new();
    for f in ["a", "b", "c"] {
        let sk = skeleton(f);
        let rep = verify_report(&sk, false).map_err(|e| e.to_string())?;
        if !rep.passed() {
            return Err(format!("fixture {f}:\n{rep}"));
        }
        if rep.suites.iter().flat_map(|s| &s.checks).any(|c| c.witness.is_some()) {
            return Err(format!("fixture {f}: a witness was recorded"));
        }
        let broken = verify_report(&sk, true).map_err(|e| e.to_string())?;
        let failing: BTreeSet<&str> = broken.suites.iter().flat_map(|s| s.failing()).collect();
        if failing != BTreeSet::from(["5"]) {
            return Err(format!("fixture {f}: broken pairing fails {failing:?}"));
        }
        counts.push(format!("{f} {} suites", rep.suites.len()));
    }
    Ok(format!("all suites pass; zero pairing fails exactly axiom 5 ({})", counts.join(", ")))
}

/// Filtered dimensions of `(g, T) / Rel` from the oracle.
fn assembly_oracle(sk: &Skeleton2, d: u64) -> Vec<u64> {
    let asm = assemble_l(sk).unwrap();
    let rels: Vec<Polynomial> = asm.relations.iter().map(|r| r.poly.clone()).collect();
    let e1 = sk.ring(1);
    (0..=d)
        .map(|e| {
            let all = monomials_of_degree(asm.ring.weights(), e).len();
            let base = monomials_of_degree(e1.weights(), e).len();
            (all - base - macaulay_piece(&asm.ring, &rels, e).dim()) as u64
        })
        .collect()
}

/// Filtered dimensions of `NE2 / P2` from the oracle.
fn l_oracle(sk: &Skeleton2, d: u64) -> Vec<u64> {
    let mo = moore(sk).unwrap();
    let p2 = peiffer_p2(sk, &mo, P2Route::CFamilies).unwrap();
    (0..=d)
        .map(|e| {
            let (_, k) = joint_kernel(&[sk.face(2, 0), sk.face(2, 1)], e);
            (k.dim() - macaulay_piece(sk.ring(2), p2.gens(), e).dim()) as u64
        })
        .collect()
}

fn corner_criterion(fixtures: &[&str], d: u64) -> Result<String, String> {
    let mut notes = Vec::new();
    for &f in fixtures {
        let sk = skeleton(f);
        let start = Instant::now();
        let sec = compare_corner(&sk, d).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        for id in ["well-defined", "surjective", "hilbert"] {
            let c = sec.checks.iter().find(|c| c.id == id).ok_or(format!("{f}: no {id} check"))?;
            if !c.passed() {
                return Err(format!("{f}: {c}"));
            }
        }
        let want = cumulative(&assembly_oracle(&sk, d));
        let want_l = cumulative(&l_oracle(&sk, d));
        if sec.rows[0].dims != want || sec.rows[1].dims != want_l || want != want_l {
            return Err(format!(
                "{f}: rows {:?} / {:?}, oracle {want:?} / {want_l:?}",
                sec.rows[0].dims, sec.rows[1].dims
            ));
        }
        if elapsed > CORNER_LIMIT {
            return Err(format!("{f}: took {elapsed:?}"));
        }
        notes.push(format!("{f} {want:?} in {:.2}s", elapsed.as_secs_f64()));
    }
    Ok(format!("well-defined, surjective, Hilbert rows equal the oracle ({})", notes.join("; ")))
}

fn criterion_5() -> Result<String, String> {
    let run = |f: &str| -> Result<(GradedDims, GradedDims), String> {
        let sk = skeleton(f);
        Ok((
            aq_h2(&sk, H2Route::Syzygy, 8).map_err(|e| e.to_string())?,
            aq_h2(&sk, H2Route::Kernel, 8).map_err(|e| e.to_string())?,
        ))
    };
    let (sa, ka) = run("a")?;
    if !sa.is_zero() || !ka.is_zero() {
        return Err(format!("fixture A: {:?} / {:?}", sa.dims, ka.dims));
    }
    let sk = skeleton("b");
    let r = sk.ring(0);
    let p = |s: &str| parse_poly(s, r).unwrap();
    let shifts = [2, 2];
    let graded: Vec<u64> = (0..=8)
        .map(|d| {
            let (_, top) = submodule_piece(r, &shifts, &[vec![p("y"), p("-x")]], d);
            let (_, bot) = submodule_piece(r, &shifts, &[vec![p("x*y"), p("-x^2")]], d);
            (top.dim() - bot.dim()) as u64
        })
        .collect();
    let want = cumulative(&graded);
    let (sb, kb) = run("b")?;
    if sb.dims != want || kb.dims != want {
        return Err(format!("fixture B: {:?} / {:?}, oracle {want:?}", sb.dims, kb.dims));
    }
    Ok(format!("A zero through degree 8; B {want:?}; routes agree"))
}

fn criterion_6() -> Result<String, String> {
    let mut notes = Vec::new();
    for f in ["a", "b", "c"] {
        let sk = skeleton(f);
        let mo = moore(&sk).map_err(|e| e.to_string())?;
        let p = pi1(&sk, &mo, 6).map_err(|e| e.to_string())?;
        if p.squared != p.simplicial {
            return Err(format!("{f}: pi_1 {:?} vs {:?}", p.squared.dims, p.simplicial.dims));
        }
        notes.push(format!("pi_1 {f} {:?}", p.squared.dims));
    }
    let sk = skeleton("c");
    let mo = moore(&sk).map_err(|e| e.to_string())?;
    let p2 = peiffer_p2(&sk, &mo, P2Route::CFamilies).map_err(|e| e.to_string())?;
    let (dims, _) = pi2(&sk, &mo, &p2, 5).map_err(|e| e.to_string())?;
    let graded: Vec<u64> = (0..=5)
        .map(|d| {
            let (_, z) = joint_kernel(&[sk.face(2, 0), sk.face(2, 1), sk.face(2, 2)], d);
            (z.dim() - macaulay_piece(sk.ring(2), p2.gens(), d).dim()) as u64
        })
        .collect();
    let want = cumulative(&graded);
    if dims.dims != want {
        return Err(format!("pi_2 of C {:?}, oracle {want:?}", dims.dims));
    }
    notes.push(format!("pi_2 c {want:?}"));
    Ok(notes.join("; "))
}

fn section_passes(sec: &xsquare::report::HomotopySection) -> Result<(), String> {
    match sec.checks.iter().find(|c| !c.passed()) {
        Some(c) => Err(format!("{}: {c}", sec.title)),
        None => Ok(()),
    }
}

/// `∂3(NE3)` in degree `d`, every generator of `E3` being degenerate.
fn boundary_oracle(sk: &Skeleton2, d: u64) -> xsquare_oracle::Subspace {
    let (_, cycles) = joint_kernel(&[sk.face(3, 0), sk.face(3, 1), sk.face(3, 2)], d);
    let (_, dst, cols) = hom_columns(sk.face(3, 3), d);
    image(sk.field(), &cols, dst.dim(), &cycles)
}

fn criterion_7() -> Result<String, String> {
    let sk = skeleton("c");
    let sec = p2_routes(&sk).map_err(|e| e.to_string())?;
    section_passes(&sec)?;
    let mut notes = Vec::new();
    for f in ["a", "b", "c"] {
        let sk = skeleton(f);
        let mo = moore(&sk).map_err(|e| e.to_string())?;
        let p2 = peiffer_p2(&sk, &mo, P2Route::CFamilies).map_err(|e| e.to_string())?;
        let mut graded = Vec::new();
        for d in 0..=6 {
            let want = boundary_oracle(&sk, d);
            let got = macaulay_piece(sk.ring(2), p2.gens(), d);
            if !want.equals(&got) {
                return Err(format!("{f}: degree {d} boundaries have dimension {}, P2 {}", want.dim(), got.dim()));
            }
            graded.push(want.dim() as u64);
        }
        notes.push(format!("{f} {graded:?}"));
    }
    Ok(format!(
        "routes agree on C; P2 equals the oracle d3(NE3) per degree through 6 ({})",
        notes.join("; ")
    ))
}

fn criterion_8() -> Result<String, String> {
    let mut notes = Vec::new();
    for f in ["a", "b", "c"] {
        let sec = compare_xy(&skeleton(f), 6).map_err(|e| e.to_string())?;
        section_passes(&sec)?;
        let kernel = &sec.rows.iter().find(|r| r.name == "kernel homology").unwrap().dims;
        if kernel.iter().any(|&k| k != 0) {
            return Err(format!("{f}: kernel homology {kernel:?}"));
        }
        let pi1x = &sec.rows.iter().find(|r| r.name == "pi_1 X").unwrap().dims;
        notes.push(format!("{f} pi_1 {pi1x:?}"));
    }
    Ok(format!("split epimorphism X -> Y, kernel homology zero, pi rows agree ({})", notes.join("; ")))
}

fn criterion_9() -> Result<String, String> {
    let sec = stability(&skeleton("c")).map_err(|e| e.to_string())?;
    section_passes(&sec)?;
    let n = sec.checks.iter().filter(|c| c.status == xsquare::Status::Pass).count();
    if n != 3 {
        return Err(format!("expected three equalities, found {n}"));
    }
    Ok("M(E^(i), n) = M(E^(i+1), n) for (n, i) in (0,1), (0,2), (1,2) on C".into())
}

fn criterion_10() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_xsquare");
    let mut runs = 0;
    for f in ["a", "b", "c"] {
        for cmd in ["build", "verify", "homotopy", "compare"] {
            for fmt in ["text", "json"] {
                let go = || {
                    Command::new(bin)
                        .args([cmd, "--format", fmt])
                        .arg(fixture_path(f))
                        .output()
                        .map_err(|e| e.to_string())
                };
                let (x, y) = (go()?, go()?);
                if x.stdout != y.stdout || x.status != y.status {
                    return Err(format!("{cmd} {f} --format {fmt} differs between runs"));
                }
                if x.status.code() != Some(0) {
                    return Err(format!("{cmd} {f} exited {:?}", x.status.code()));
                }
                runs += 2;
            }
        }
    }
    Ok(format!("{runs} runs, byte-identical in pairs"))
}

fn main() {
    let criteria: [(&str, fn() -> Result<String, String>); 10] = [
        ("1 GB soundness", criterion_1),
        ("2 axiom suites", criterion_2),
        ("3 tensor corner, A and B", || corner_criterion(&["a", "b"], 6)),
        ("4 assembly with S3, C", || corner_criterion(&["c"], 5)),
        ("5 Andre-Quillen H2", criterion_5),
        ("6 homotopy cross-route", criterion_6),
        ("7 P2 route equality", criterion_7),
        ("8 X -> Y split epimorphism", criterion_8),
        ("9 stability", criterion_9),
        ("10 determinism", criterion_10),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("criterion {name}: PASS ({secs:.2}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({secs:.2}s) {msg}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
