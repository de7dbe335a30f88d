//! Acceptance suite. Runs every criterion, prints one line per criterion,
//! and exits nonzero if any fails.

mod support;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qf_core::cocycle::{verify_cocycle_mod_p, Triple};
use qf_core::{
    assets, check_lemma_admissible, cocycle_kernel_basis, count_colorings, enumerate_colorings,
    enumerate_good_involutions, make_theta, parse_diagram, theorem1_report, verify_cocycle3,
    verify_good_involution, verify_quandle, weight, AbelianElement, AbelianSignature, Cocycle3,
    FamilyParams, LinkDiagram, Movie, Quandle, QuandleFile, SymmetricQuandle, TriplePointEvent,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Fastest of `runs` timed executions.
fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..runs {
        let start = Instant::now();
        let v = f();
        best = best.min(start.elapsed());
        out = Some(v);
    }
    (out.unwrap(), best)
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("took {elapsed:?}, limit {limit:?}"),
    )
}

fn p3_file() -> QuandleFile {
    QuandleFile::from_json(assets::require("p3").unwrap()).unwrap()
}

fn ac1_p3() -> Outcome {
    let file = p3_file();
    let rho = file.rho.clone().ok_or("bundled P3 has no rho")?;
    let (res, elapsed) = best_of(5, || {
        let q = verify_quandle(&file.table)?;
        verify_good_involution(&q, &rho)?;
        Ok::<_, qf_core::Error>(q)
    });
    let q = res.map_err(|e| e.to_string())?;
    ensure(q == Quandle::p3(), "bundled table differs from P3")?;
    ensure(rho == [0, 2, 1], "bundled rho is not [0,2,1]")?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!(
        "axioms and good involution hold exhaustively ({elapsed:?})"
    ))
}

fn ac2_theta() -> Outcome {
    let sq = SymmetricQuandle::p3();
    let file = qf_core::CocycleFile::from_json(assets::require("theta").unwrap())
        .map_err(|e| e.to_string())?;
    let values = file.values().map_err(|e| e.to_string())?;
    let (res, elapsed) = best_of(5, || {
        let phi = verify_cocycle3(&sq, file.signature, values.clone())?;
        let adm = check_lemma_admissible(&phi);
        Ok::<_, qf_core::Error>((phi, adm))
    });
    let (phi, adm) = res.map_err(|e| e.to_string())?;
    ensure(phi == make_theta(), "bundled theta differs from make_theta")?;
    ensure(adm.admissible, format!("offenders {:?}", adm.offenders))?;
    let instances = qf_core::cocycle::condition_instances(&sq);
    let count = |p: &str| {
        instances
            .iter()
            .filter(|i| i.condition.starts_with(p))
            .count()
    };
    let exact = |p: &str| instances.iter().filter(|i| i.condition == p).count();
    ensure(
        (exact("i"), exact("ii"), count("iii.")) == (81, 18, 81),
        "unexpected instance counts",
    )?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!(
        "81 quadruples, 9 pairs (x2), 27 triples x3 pass; admissible ({elapsed:?})"
    ))
}

fn grid() -> Vec<FamilyParams> {
    fn tuples(len: usize, values: &[u64]) -> Vec<Vec<u64>> {
        (0..len).fold(vec![Vec::new()], |acc, _| {
            acc.into_iter()
                .flat_map(|t| {
                    values.iter().map(move |&v| {
                        let mut t = t.clone();
                        t.push(v);
                        t
                    })
                })
                .collect()
        })
    }
    let mut out = Vec::new();
    for k in 0..=3 {
        for m in 0..=3 {
            for g in tuples(k, &[0, 1, 2, 3]) {
                for gp in tuples(m, &[2, 4, 6]) {
                    out.push(FamilyParams::new(k, m, g.clone(), gp).unwrap());
                }
            }
        }
    }
    out
}

fn ac3_grid() -> Outcome {
    let params = grid();
    let start = Instant::now();
    for p in &params {
        let r = theorem1_report(p).map_err(|e| format!("{p:?}: {e}"))?;
        let sum = p.gprime_sum();
        let expected_weight = AbelianElement::new(vec![0], vec![sum as i64]).unwrap();
        ensure(
            r.weight == expected_weight,
            format!("{p:?}: weight {}", r.weight),
        )?;
        ensure(
            r.lower_bound == sum,
            format!("{p:?}: bound {}", r.lower_bound),
        )?;
        ensure(
            r.triple_count == sum,
            format!("{p:?}: triples {}", r.triple_count),
        )?;
        ensure(r.triple_point_number == sum, format!("{p:?}: t(F)"))?;
        let g = &r.components[0];
        ensure(
            g.name == "G" && g.orientable && g.genus == (p.k + p.m) as u64,
            format!("{p:?}: G genus {}", g.genus),
        )?;
        for (i, &gi) in p.g.iter().enumerate() {
            let c = &r.components[1 + i];
            ensure(
                c.orientable && c.genus == gi,
                format!("{p:?}: {} genus", c.name),
            )?;
        }
        for (i, &gi) in p.gprime.iter().enumerate() {
            let c = &r.components[1 + p.k + i];
            ensure(
                !c.orientable && c.genus == gi,
                format!("{p:?}: {} genus", c.name),
            )?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!(
        "{} parameter sets exact ({elapsed:?})",
        params.len()
    ))
}

fn ac4_oracle() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for (dname, d) in support::bundled_diagrams() {
        ensure(d.semi_arc_count() <= 8, format!("{dname} too large"))?;
        for (qname, q) in support::small_quandles() {
            for rho in enumerate_good_involutions(&q) {
                let sq = SymmetricQuandle::from_parts(q.clone(), rho.clone()).unwrap();
                let (expected, _) = support::brute_force_colorings(&d, &sq);
                let got = enumerate_colorings(&d, &sq).len() as u128;
                ensure(
                    got == expected,
                    format!(
                        "{dname} over {qname}/{:?}: {got} vs oracle {expected}",
                        rho.as_slice()
                    ),
                )?;
                cases += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!(
        "{cases} diagram/quandle/involution cases agree ({elapsed:?})"
    ))
}

fn diagram(name: &str) -> LinkDiagram {
    parse_diagram(assets::require(name).unwrap()).unwrap()
}

fn ac5_counts() -> Outcome {
    let r3_id = QuandleFile::from_json(assets::require("r3_id").unwrap())
        .and_then(|f| f.symmetric())
        .map_err(|e| e.to_string())?;
    let t2_id = QuandleFile::from_json(assets::require("t2_id").unwrap())
        .and_then(|f| f.symmetric())
        .map_err(|e| e.to_string())?;
    let trefoil = count_colorings(&diagram("trefoil"), &r3_id);
    let unknot = count_colorings(&diagram("unknot"), &SymmetricQuandle::p3());
    let hopf = count_colorings(&diagram("hopf"), &t2_id);
    ensure(
        (trefoil, unknot, hopf) == (9, 2, 4),
        format!("got trefoil {trefoil}, unknot {unknot}, hopf {hopf}"),
    )?;
    Ok("trefoil/(R3,id) = 9, unknot/(P3,rho) = 2, Hopf/(T2,id) = 4".into())
}

fn ac6_kernel() -> Outcome {
    let sq = SymmetricQuandle::p3();
    let ((space, rank), elapsed) = best_of(1, || {
        let space = cocycle_kernel_basis(&sq, 2);
        let rank = support::mod2_condition_rank(&sq);
        (space, rank)
    });
    let space = space.map_err(|e| e.to_string())?;
    let expected = 27 - rank;
    ensure(
        space.dimension() == expected,
        format!("dimension {} vs independent {expected}", space.dimension()),
    )?;
    for (i, v) in space.basis.iter().enumerate() {
        verify_cocycle_mod_p(&sq, 2, v).map_err(|e| format!("basis[{i}]: {e}"))?;
    }
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!(
        "dimension {} = 27 - rank {rank}; all basis vectors are mod-2 cocycles ({elapsed:?})",
        space.dimension()
    ))
}

fn check_rho_identity(phi: &Cocycle3) -> Result<(), String> {
    let sq = phi.symmetric_quandle();
    let n = sq.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let a = phi.value([sq.rho(x), y, z]);
                let b = phi.value([x, y, z]).negate().map_err(|e| e.to_string())?;
                ensure(a == b, format!("phi(rho({x}),{y},{z}) = {a}, -phi = {b}"))?;
            }
        }
    }
    Ok(())
}

fn random_events(rng: &mut ChaCha8Rng) -> Vec<TriplePointEvent> {
    let len = rng.gen_range(0..20);
    (0..len)
        .map(|_| {
            let eps = if rng.gen_bool(0.5) { 1 } else { -1 };
            let c: Triple = [
                rng.gen_range(0..3),
                rng.gen_range(0..3),
                rng.gen_range(0..3),
            ];
            TriplePointEvent::new(eps, c)
        })
        .collect()
}

fn ac7_properties() -> Outcome {
    let sq = SymmetricQuandle::p3();
    let theta = make_theta();

    // Condition (iii) sign identity for every cocycle at hand.
    let mut cocycles = vec![
        theta.clone(),
        Cocycle3::zero(&sq, AbelianSignature::new(1, 1)),
        theta.negate().unwrap(),
    ];
    let mut acc = theta.clone();
    for _ in 0..4 {
        acc = acc.add(&theta).map_err(|e| e.to_string())?;
        cocycles.push(acc.clone());
    }
    for phi in &cocycles {
        check_rho_identity(phi)?;
    }
    // Kernel vectors over Z_3, where the sign is visible.
    let space = cocycle_kernel_basis(&sq, 3).map_err(|e| e.to_string())?;
    for v in &space.basis {
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    let i = |a: usize| (a * 3 + y) * 3 + z;
                    ensure(
                        (v[i(sq.rho(x))] + v[i(x)]) % 3 == 0,
                        format!("mod-3 basis vector breaks the rho identity at ({x},{y},{z})"),
                    )?;
                }
            }
        }
    }

    // Weight additivity and sign flip on random event lists.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let movie = |t: Vec<TriplePointEvent>| Movie::new(sq.clone(), vec![], t, None).unwrap();
    for _ in 0..1000 {
        let a = random_events(&mut rng);
        let b = random_events(&mut rng);
        let wa = weight(&movie(a.clone()), &theta).unwrap();
        let wb = weight(&movie(b.clone()), &theta).unwrap();
        let ab: Vec<_> = a.iter().chain(&b).copied().collect();
        let wab = weight(&movie(ab), &theta).unwrap();
        ensure(wab == wa.add(&wb).unwrap(), "weight is not additive")?;
        let flipped: Vec<_> = a
            .iter()
            .map(|t| TriplePointEvent::new(-t.epsilon, t.color))
            .collect();
        let wf = weight(&movie(flipped), &theta).unwrap();
        ensure(
            wf.alphas() == wa.alphas() && wf.betas() == wa.negate().unwrap().betas(),
            "sign flip does not negate the Z part",
        )?;
    }

    // Orientation reversal of any component keeps coloring counts.
    let mut symmetric: Vec<SymmetricQuandle> = Vec::new();
    for (_, q) in support::small_quandles() {
        for rho in enumerate_good_involutions(&q) {
            symmetric.push(SymmetricQuandle::from_parts(q.clone(), rho).unwrap());
        }
    }
    for (dname, d) in support::bundled_diagrams() {
        for s in &symmetric {
            let base = count_colorings(&d, s);
            for c in 0..d.components().len() {
                ensure(
                    count_colorings(&d.reverse_component(c), s) == base,
                    format!("{dname}: reversing component {c} changes the count"),
                )?;
            }
        }
    }
    Ok(format!(
        "rho identity on {} cocycles + {} mod-3 vectors; 1000 random event lists; reversal on all bundled diagrams",
        cocycles.len(),
        space.dimension()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("AC1 P3 quandle and good involution", ac1_p3),
        ("AC2 theta cocycle and admissibility", ac2_theta),
        ("AC3 family grid t(F) = sum g'", ac3_grid),
        ("AC4 coloring oracle equivalence", ac4_oracle),
        ("AC5 specific coloring counts", ac5_counts),
        ("AC6 kernel solver cross-check", ac6_kernel),
        ("AC7 property suites", ac7_properties),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
