//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails.
//!
//! Run with `cargo test -p quotcheck --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use quotcheck::catalog::{builtin_theorem_catalog, emit_report, Classification, Format, Report};
use quotcheck::checks::{
    base_case_check, iso_check, lemma_a_check, mcg_orbit_checks, relation_check, simplicity_check,
    sn_quotient_lattice_check, sp_info, theorem_a_catalog_check, Verdict,
};
use quotcheck::gf2::sp_group;
use quotcheck::group::{named, FiniteGroupTable, Permutation, DEFAULT_CEILING};
use quotcheck::hom::{
    canonicalize, classify_homs, enumerate_homs, equal_up_to_aut, exceptional_b4_maps, f4,
    s6_outer_automorphism, standard_projection, HomClass, SearchOptions,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sym(n: usize) -> Result<FiniteGroupTable<Permutation>, String> {
    named::symmetric(n).map_err(err)
}

fn non_cyclic_classes(n: usize) -> Result<Vec<HomClass<Permutation>>, String> {
    classify_homs(n, &sym(n)?, &SearchOptions::non_cyclic()).map_err(err)
}

fn corollary_counts() -> Outcome {
    for n in [3, 5] {
        let classes = non_cyclic_classes(n)?;
        let pi = canonicalize(&standard_projection(n).map_err(err)?, &sym(n)?).map_err(err)?;
        ensure(classes == vec![pi], || format!("B{n} -> S{n}: {} classes", classes.len()))?;
    }
    let s6 = sym(6)?;
    let classes = non_cyclic_classes(6)?;
    ensure(classes.len() == 2, || format!("B6 -> S6: {} classes", classes.len()))?;
    let pi = standard_projection(6).map_err(err)?;
    let twisted = pi.postcompose(&s6_outer_automorphism(&s6).map_err(err)?).map_err(err)?;
    let expected: BTreeSet<_> = [canonicalize(&pi, &s6), canonicalize(&twisted, &s6)]
        .into_iter()
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let found: BTreeSet<_> = classes.iter().cloned().collect();
    ensure(found == expected, || "B6 -> S6 classes are not {pi, outer . pi}".into())?;
    let (a, b) = (&classes[0].representative, &classes[1].representative);
    ensure(equal_up_to_aut(a, b, &s6).map_err(err)?, || "classes not identified".into())?;
    Ok("B3, B5 -> 1 class; B6 -> 2 classes identified up to Aut(S6)".into())
}

fn b4_classification() -> Outcome {
    let s4 = sym(4)?;
    let found: BTreeSet<_> = non_cyclic_classes(4)?.into_iter().collect();
    let mut expected = BTreeSet::new();
    expected.insert(canonicalize(&standard_projection(4).map_err(err)?, &s4).map_err(err)?);
    for (name, h) in exceptional_b4_maps().map_err(err)? {
        ensure(h.is_valid(), || format!("{name} is not a homomorphism"))?;
        let c = canonicalize(&h, &s4).map_err(err)?;
        let want = match name {
            "f3" => Some(12),
            "f4" => Some(6),
            _ => None,
        };
        if let Some(order) = want {
            ensure(c.image_order == order, || format!("{name} image order {}", c.image_order))?;
        }
        expected.insert(c);
    }
    ensure(expected.len() == 5, || "pi, f1..f4 are not pairwise non-conjugate".into())?;
    ensure(found == expected, || format!("found {} classes, expected pi, f1..f4", found.len()))?;
    Ok("B4 -> S4 = {pi, f1, f2, f3, f4}; |im f3| = 12, |im f4| = 6".into())
}

fn lemma_a() -> Outcome {
    for (n, pairs) in [(5, 10), (6, 15)] {
        for c in non_cyclic_classes(n)? {
            let r = lemma_a_check(&c.representative).map_err(err)?;
            ensure(r.verdict == Verdict::Pass, || format!("n = {n}: {:?}", r.witnesses))?;
            let distinct = r.counts_value("distinct_images").unwrap_or("");
            ensure(distinct == pairs.to_string(), || format!("n = {n}: {distinct} distinct"))?;
        }
    }
    let r = lemma_a_check(&f4().map_err(err)?).map_err(err)?;
    ensure(r.verdict == Verdict::Exempt && !r.witnesses.is_empty(), || {
        "f4 shows no rho collision".into()
    })?;
    Ok(format!("10 and 15 distinct rho images; f4 collision: {}", r.witnesses[0]))
}

fn base_cases() -> Outcome {
    let r = base_case_check().map_err(err)?;
    ensure(r.passed(), || r.witnesses.join("; "))?;
    let raw = r.counts_value("B3->S3.non_cyclic_raw").unwrap_or("");
    ensure(raw == "6", || format!("{raw} raw B3 -> S3 homs"))?;
    Ok("order <= 6: only S3, one class; 6 raw B3 -> S3 homs".into())
}

fn catalog_n5() -> Outcome {
    let catalog = builtin_theorem_catalog().map_err(err)?;
    let r = theorem_a_catalog_check(5, &catalog).map_err(err)?;
    ensure(r.passed(), || r.witnesses.join("; "))?;
    for g in catalog.iter().filter(|g| g.table.order() < 120) {
        let key = format!("{}.non_cyclic_classes", g.name);
        ensure(r.counts_value(&key) == Some("0"), || format!("{key} nonzero"))?;
    }
    Ok(format!("{} groups, none of order < 120 receives a non-cyclic B5", catalog.len()))
}

fn sp_orders() -> Outcome {
    let mut orders = vec![1u128];
    for g in 1..=3 {
        let info = sp_info(g, DEFAULT_CEILING).map_err(err)?;
        ensure(info.passed(), || format!("g = {g}: {} vs {}", info.order, info.order_formula))?;
        orders.push(info.order as u128);
    }
    ensure(orders[1..] == [6, 720, 1_451_520], || format!("{orders:?}"))?;
    for g in 2..=3u32 {
        let step = (1u128 << (2 * g - 1)) * ((1u128 << (2 * g)) - 1);
        let (big, small) = (orders[g as usize], orders[g as usize - 1]);
        ensure(big == step * small, || format!("recursion fails at g = {g}"))?;
    }
    Ok("6, 720, 1451520 = product formula; recursion holds for g = 2, 3".into())
}

fn orbit_counts() -> Outcome {
    let mut summary = Vec::new();
    for (g, class, orbit, stab) in [(1, "3", "6", "1"), (2, "15", "120", "6"), (3, "63", "2016", "720")] {
        let r = mcg_orbit_checks(g, DEFAULT_CEILING).map_err(err)?;
        ensure(r.passed(), || r.witnesses.join("; "))?;
        let got = (
            r.counts_value("transvection_class_size"),
            r.counts_value("pair_orbit_size"),
            r.counts_value("pair_stabilizer_order"),
        );
        ensure(got == (Some(class), Some(orbit), Some(stab)), || format!("g = {g}: {got:?}"))?;
        summary.push(format!("{class}/{orbit}/{stab}"));
    }
    Ok(format!("class/orbit/stabilizer = {}", summary.join(", ")))
}

fn refinement_isos() -> Outcome {
    for (g, order) in [(1, "6"), (2, "720")] {
        let r = iso_check(g, DEFAULT_CEILING).map_err(err)?;
        ensure(r.passed(), || r.witnesses.join("; "))?;
        ensure(r.counts_value("image_order") == Some(order), || format!("g = {g}"))?;
    }
    Ok("Sp(2,F2) -> S3 and Sp(4,F2) -> S6 faithful and onto".into())
}

fn simplicity() -> Outcome {
    let sp6 = sp_group(3, DEFAULT_CEILING).map_err(err)?;
    let r = simplicity_check("sp6", &sp6).map_err(err)?;
    ensure(r.passed(), || r.witnesses.join("; "))?;
    for k in [5, 6] {
        let r = simplicity_check(&format!("A{k}"), &named::alternating(k).map_err(err)?).map_err(err)?;
        ensure(r.passed(), || r.witnesses.join("; "))?;
        let r = sn_quotient_lattice_check(k).map_err(err)?;
        ensure(r.passed(), || r.witnesses.join("; "))?;
    }
    let s5 = simplicity_check("S5", &sym(5)?).map_err(err)?;
    ensure(!s5.passed(), || "S5 reported simple".into())?;
    Ok("Sp(6,F2), A5, A6 simple; S5, S6 normal subgroups {1, An, Sn}".into())
}

fn outer_automorphism() -> Outcome {
    let s6 = sym(6)?;
    let phi = s6_outer_automorphism(&s6).map_err(err)?;
    ensure(!phi.is_inner(&s6), || "outer automorphism is inner".into())?;
    Ok("valid automorphism of S6, no inner realization among 720".into())
}

fn relations() -> Outcome {
    for n in 3..=6 {
        let r = relation_check(n).map_err(err)?;
        ensure(r.passed(), || r.witnesses.join("; "))?;
    }
    for n in 2..=6 {
        for m in 1..=12 {
            let zm = named::cyclic(m).map_err(err)?;
            let count = enumerate_homs(n, &zm, &SearchOptions::default()).map_err(err)?.len();
            ensure(count == m, || format!("#Hom(B{n}, Z{m}) = {count}"))?;
        }
    }
    Ok("relation suite n <= 6 passes; #Hom(B_n, Z_m) = m".into())
}

fn reports() -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let emit = |r: Report| [emit_report(&r, Format::Json), emit_report(&r, Format::Tsv)];
    for n in [4, 6] {
        let s = sym(n)?;
        let classes = non_cyclic_classes(n)?;
        out.extend(emit(Report::Classification(Classification::from_classes(
            n, &format!("S{n}"), s.order(), &classes, true,
        ))));
        let raw = enumerate_homs(n, &s, &SearchOptions::non_cyclic()).map_err(err)?;
        let c = Classification::from_raw(n, &format!("S{n}"), s.order(), &raw, true).map_err(err)?;
        out.extend(emit(Report::Classification(c)));
    }
    out.extend(emit(Report::Check(base_case_check().map_err(err)?)));
    out.extend(emit(Report::Check(lemma_a_check(&f4().map_err(err)?).map_err(err)?)));
    let catalog = builtin_theorem_catalog().map_err(err)?;
    out.extend(emit(Report::Check(theorem_a_catalog_check(5, &catalog).map_err(err)?)));
    out.extend(emit(Report::Check(mcg_orbit_checks(2, DEFAULT_CEILING).map_err(err)?)));
    out.extend(emit(Report::SpInfo(sp_info(2, DEFAULT_CEILING).map_err(err)?)));
    out.extend(emit(Report::Check(relation_check(5).map_err(err)?)));
    Ok(out)
}

fn determinism() -> Outcome {
    let run = |workers: usize| -> Result<Vec<String>, String> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(err)?
            .install(reports)
    };
    let baseline = run(1)?;
    for workers in [1, 2, 4, 8] {
        ensure(run(workers)? == baseline, || format!("output differs with {workers} workers"))?;
    }
    Ok(format!("{} serialized reports identical across runs and 1/2/4/8 workers", baseline.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("braid quotients onto S_n for n = 3, 5, 6", corollary_counts),
        ("B4 -> S4 classification", b4_classification),
        ("distinct band generator images", lemma_a),
        ("order <= 6 base cases", base_cases),
        ("n = 5 built-in catalog", catalog_n5),
        ("Sp(2g, F2) orders", sp_orders),
        ("transvection and pair orbits", orbit_counts),
        ("refinement isomorphisms", refinement_isos),
        ("simplicity and S_n normal subgroups", simplicity),
        ("S6 outer automorphism", outer_automorphism),
        ("braid relation suite and cyclic targets", relations),
        ("byte determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
