//! Verification checks producing [`CheckReport`]s.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::braid::{relation_suite, RelationKind};
use crate::error::{GroupError, Result};
use crate::gf2::{
    iso_to_symmetric, quadratic_refinements, sp_group, sp_order_formula, symplectic_pair_count,
    transvection, transvections, GF2Vector,
};
use crate::group::{
    centralizer, conjugacy_class, conjugacy_classes, is_simple, named, normal_closure,
    orbit_stabilizer, proper_normal_witness, ConjugationAction, FiniteGroupTable, GroupElement,
    Permutation,
};
use crate::hom::{
    b4_to_s3_composite, canonicalize, classify_homs, enumerate_homs, equal_up_to_aut,
    standard_projection, BraidHom, SearchOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A failure the statement under test explicitly allows.
    Exempt,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Exempt => "exempt",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub counts: Vec<CountRow>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            params: BTreeMap::new(),
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            counts: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn count(&mut self, label: impl Into<String>, value: impl ToString) {
        self.counts.push(CountRow {
            label: label.into(),
            value: value.to_string(),
        });
    }

    /// Records a failed assertion with its witness.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.verdict = Verdict::Fail;
        self.witnesses.push(witness.into());
    }

    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn counts_value(&self, label: &str) -> Option<&str> {
        self.counts
            .iter()
            .find(|c| c.label == label)
            .map(|c| c.value.as_str())
    }

    /// Merges sub-reports; the result fails if any part fails.
    pub fn combine(name: &str, parts: Vec<CheckReport>) -> CheckReport {
        let mut out = CheckReport::new(name);
        for part in parts {
            for (k, v) in part.params {
                out.params.insert(format!("{}.{}", part.name, k), v);
            }
            if part.verdict == Verdict::Fail {
                out.verdict = Verdict::Fail;
            } else if part.verdict == Verdict::Exempt && out.verdict == Verdict::Pass {
                out.verdict = Verdict::Exempt;
            }
            out.witnesses
                .extend(part.witnesses.into_iter().map(|w| format!("{}: {w}", part.name)));
            out.counts.extend(part.counts.into_iter().map(|c| CountRow {
                label: format!("{}.{}", part.name, c.label),
                value: c.value,
            }));
        }
        out
    }
}

fn show<E: GroupElement>(x: &E) -> String {
    x.render().to_string()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `ρ_{i,j}` images of a non-cyclic hom must be pairwise distinct; for
/// `n = 4` collisions are reported but exempt.
pub fn lemma_a_check<E: GroupElement>(h: &BraidHom<E>) -> Result<CheckReport> {
    let n = h.strands();
    if n < 3 {
        return Err(GroupError::OutOfRange(format!("lemma check needs n ≥ 3, got {n}")));
    }
    if !h.is_valid() {
        return Err(GroupError::InvalidHom("lemma check on an invalid hom".into()));
    }
    let mut report = CheckReport::new("lemma_a")
        .param("n", n)
        .param("hom", serde_json::Value::from(h.render()));
    if h.is_cyclic() {
        report.count("cyclic", true);
        return Ok(report);
    }
    report.count("cyclic", false);
    let images = h.bkl_images()?;
    let mut by_image: BTreeMap<&E, Vec<(usize, usize)>> = BTreeMap::new();
    for (pair, img) in &images {
        by_image.entry(img).or_default().push(*pair);
    }
    report.count("rho_words", images.len());
    report.count("distinct_images", by_image.len());
    let collisions: Vec<String> = by_image
        .iter()
        .filter(|(_, pairs)| pairs.len() > 1)
        .map(|(img, pairs)| {
            let names: Vec<String> = pairs.iter().map(|(i, j)| format!("rho({i},{j})")).collect();
            format!("{} -> {}", names.join(" = "), show(*img))
        })
        .collect();
    if !collisions.is_empty() {
        report.witnesses = collisions;
        report.verdict = if n == 4 { Verdict::Exempt } else { Verdict::Fail };
    }
    Ok(report)
}

/// A named permutation group.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub table: FiniteGroupTable<Permutation>,
}

impl NamedGroup {
    pub fn new(name: &str, table: FiniteGroupTable<Permutation>) -> Self {
        NamedGroup {
            name: name.to_string(),
            table,
        }
    }
}

/// The eight isomorphism types of order ≤ 6.
pub fn small_groups_catalog() -> Result<Vec<NamedGroup>> {
    let mut out = Vec::new();
    for m in 1..=6 {
        out.push(NamedGroup::new(&format!("Z{m}"), named::cyclic(m)?));
    }
    out.push(NamedGroup::new("S3", named::symmetric(3)?));
    out.push(NamedGroup::new("klein4", named::klein4()?));
    Ok(out)
}

/// Over all groups of order ≤ 6, the non-cyclic images of `B₃` and `B₄`
/// are exactly `S₃`, each forming a single conjugacy class.
pub fn base_case_check() -> Result<CheckReport> {
    let mut report = CheckReport::new("base_cases");
    let opts = SearchOptions::non_cyclic();
    for group in small_groups_catalog()? {
        for n in [3, 4] {
            let classes = classify_homs(n, &group.table, &opts)?;
            report.count(format!("B{n}->{}.non_cyclic_classes", group.name), classes.len());
            for c in &classes {
                let onto_s3 = group.name == "S3" && c.image_order == 6;
                report.expect(onto_s3, || {
                    format!(
                        "non-cyclic B{n} -> {} with image order {}: {}",
                        group.name,
                        c.image_order,
                        serde_json::Value::from(c.representative.render())
                    )
                });
            }
            if group.name == "S3" {
                report.expect(classes.len() == 1, || {
                    format!("B{n} -> S3 has {} non-cyclic classes, expected 1", classes.len())
                });
            }
        }
    }
    let s3 = named::symmetric(3)?;
    let raw = enumerate_homs(3, &s3, &opts)?;
    report.count("B3->S3.non_cyclic_raw", raw.len());
    report.expect(raw.len() == 6, || format!("B3 -> S3 has {} raw non-cyclic homs", raw.len()));

    let composite = canonicalize(&b4_to_s3_composite()?, &s3)?;
    let b4 = classify_homs(4, &s3, &opts)?;
    report.expect(b4.contains(&composite), || "B4 -> B3 -> S3 composite missing".into());

    // finite shadow of Mod(Σ₁): Sp(2, F2) ≅ S3
    let iso = iso_to_symmetric(1, usize::MAX)?;
    report.count("sp2_iso_s3", iso.is_isomorphism());
    report.expect(iso.is_isomorphism(), || "Sp(2,F2) -> S3 is not an isomorphism".into());
    Ok(report)
}

/// Every non-cyclic `B_n → G` over the catalog must have image of order
/// `n!` isomorphic to `S_n`; into `S_n` itself it must be `π` up to
/// automorphism. Groups larger than `n!` are skipped.
pub fn theorem_a_catalog_check(n: usize, catalog: &[NamedGroup]) -> Result<CheckReport> {
    if !(5..=6).contains(&n) {
        return Err(GroupError::OutOfRange(format!("catalog check needs 5 ≤ n ≤ 6, got {n}")));
    }
    let bound = factorial(n);
    let pi = standard_projection(n)?;
    let mut report = CheckReport::new("theorem_a_catalog").param("n", n);
    let opts = SearchOptions {
        max_target_order: bound,
        non_cyclic_only: true,
    };
    let mut skipped = 0;
    for group in catalog {
        let order = group.table.order();
        if order > bound {
            skipped += 1;
            continue;
        }
        let classes = classify_homs(n, &group.table, &opts)?;
        report.count(format!("{}.order", group.name), order);
        report.count(format!("{}.non_cyclic_classes", group.name), classes.len());
        let is_full_symmetric =
            group.table.identity().degree() == n && order == bound;
        for c in &classes {
            let h = &c.representative;
            let shown = serde_json::Value::from(h.render());
            if c.image_order < bound {
                report.fail(format!(
                    "counterexample: B{n} -> {} has non-cyclic image of order {} < {bound}: {shown}",
                    group.name, c.image_order
                ));
                continue;
            }
            // σ₁² ↦ 1 means the map factors through S_n; equal orders make it an isomorphism
            let factors = h.images()[0].mul(&h.images()[0]).is_identity();
            report.expect(factors, || {
                format!("{}: image of order {bound} not isomorphic to S{n}: {shown}", group.name)
            });
            if is_full_symmetric {
                let same = equal_up_to_aut(h, &pi, &group.table)?;
                report.expect(same, || {
                    format!("{}: hom not equal to pi up to automorphism: {shown}", group.name)
                });
            }
        }
    }
    report.count("groups_checked", catalog.len() - skipped);
    report.count("groups_skipped_over_order", skipped);
    Ok(report)
}

/// Normal subgroups of `S_n` are exactly `1`, `A_n`, `S_n`.
pub fn sn_quotient_lattice_check(n: usize) -> Result<CheckReport> {
    if !(5..=6).contains(&n) {
        return Err(GroupError::OutOfRange(format!("lattice check needs 5 ≤ n ≤ 6, got {n}")));
    }
    let sn = named::symmetric(n)?;
    let classes = conjugacy_classes(&sn);
    let mut normals: BTreeMap<usize, Vec<Vec<Permutation>>> = BTreeMap::new();
    normals.entry(1).or_default().push(vec![Permutation::identity(n)]);
    for &r in &classes.representatives {
        let rep = &sn.elements()[r as usize];
        let mut elems = normal_closure(&sn, std::slice::from_ref(rep))?.elements().to_vec();
        elems.sort();
        let bucket = normals.entry(elems.len()).or_default();
        if !bucket.contains(&elems) {
            bucket.push(elems);
        }
    }
    let mut report = CheckReport::new("sn_quotient_lattice").param("n", n);
    let orders: Vec<usize> = normals
        .iter()
        .flat_map(|(k, v)| std::iter::repeat_n(*k, v.len()))
        .collect();
    report.count(
        "normal_subgroup_orders",
        orders.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
    );
    let half = factorial(n) / 2;
    report.expect(orders == vec![1, half, 2 * half], || {
        format!("normal subgroup orders {orders:?}")
    });
    if let Some(an) = normals.get(&half).and_then(|v| v.first()) {
        report.expect(an.iter().all(Permutation::is_even), || {
            format!("normal subgroup of order {half} is not A{n}")
        });
        let an_table = named::alternating(n)?;
        let simple = is_simple(&an_table)?;
        report.count(format!("A{n}.simple"), simple);
        report.expect(simple, || format!("A{n} is not simple"));
    }
    Ok(report)
}

/// Simplicity report: passes iff the group is simple; otherwise the
/// witness records a proper normal subgroup.
pub fn simplicity_check<E: GroupElement>(name: &str, g: &FiniteGroupTable<E>) -> Result<CheckReport> {
    let mut report = CheckReport::new("simplicity").param("group", name);
    report.count("order", g.order());
    report.count("conjugacy_classes", conjugacy_classes(g).len());
    match proper_normal_witness(g)? {
        None => report.count("simple", true),
        Some(n) => {
            report.count("simple", false);
            report.fail(format!("proper normal subgroup of order {}", n.order()));
        }
    }
    Ok(report)
}

/// Orbit counts for transvections and symplectic pairs in Sp(2g, 𝔽₂), and
/// the transposition centralizer structure in `S_n`, `3 ≤ n ≤ 7`.
pub fn mcg_orbit_checks(g: usize, ceiling: usize) -> Result<CheckReport> {
    if !(1..=3).contains(&g) {
        return Err(GroupError::OutOfRange(format!("genus {g} outside 1..=3")));
    }
    let mut report = CheckReport::new("mcg_orbits").param("g", g);
    let sp = sp_group(g, ceiling)?;
    let dim = 2 * g;
    let t1 = transvection(&GF2Vector::basis(dim, 1)?)?;
    let t2 = transvection(&GF2Vector::basis(dim, 2)?)?;

    let mut class = conjugacy_class(&sp, &t1)?;
    class.sort();
    let mut all = transvections(g)?;
    all.sort();
    let expected_class = (1usize << dim) - 1;
    report.count("transvection_class_size", class.len());
    report.expect(class.len() == expected_class, || {
        format!("transvection class has {} elements, expected {expected_class}", class.len())
    });
    report.expect(class == all, || "transvection class differs from {T_v : v != 0}".into());

    let (orbit, stab) = orbit_stabilizer(&sp, &ConjugationAction::Pair(t1, t2))?;
    let smaller = if g == 1 { 1 } else { sp_group(g - 1, ceiling)?.order() };
    let expected_orbit = (1usize << (dim - 1)) * expected_class;
    report.count("pair_orbit_size", orbit);
    report.count("pair_stabilizer_order", stab);
    report.expect(orbit == expected_orbit, || {
        format!("pair orbit {orbit}, expected {expected_orbit}")
    });
    report.expect(stab == smaller, || {
        format!("pair stabilizer {stab}, expected |Sp({}, F2)| = {smaller}", dim - 2)
    });

    for n in 3..=7 {
        let sn = named::symmetric(n)?;
        let t = Permutation::parse_cycles(n, "(1,2)")?;
        let mut c: Vec<Permutation> = centralizer(&sn, &t)?.elements().to_vec();
        c.sort();
        let fixing: Vec<&Permutation> = sn
            .elements()
            .iter()
            .filter(|p| p.apply(1) == 1 && p.apply(2) == 2)
            .collect();
        let mut product: Vec<Permutation> = fixing
            .iter()
            .flat_map(|p| [(*p).clone(), t.mul(p)])
            .collect();
        product.sort();
        product.dedup();
        let expected = 2 * factorial(n - 2);
        report.count(format!("S{n}.transposition_centralizer"), c.len());
        report.expect(c.len() == expected && c == product, || {
            format!("centralizer of (1,2) in S{n} has order {}, expected {expected}", c.len())
        });
    }
    Ok(report)
}

/// Summary numbers for Sp(2g, 𝔽₂).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpInfo {
    pub g: usize,
    pub order: usize,
    pub order_formula: u128,
    pub transvections: usize,
    pub symplectic_pairs: usize,
    pub refinements_even: usize,
    pub refinements_odd: usize,
}

impl SpInfo {
    pub fn passed(&self) -> bool {
        self.order as u128 == self.order_formula
    }
}

pub fn sp_info(g: usize, ceiling: usize) -> Result<SpInfo> {
    let sp = sp_group(g, ceiling)?;
    let refinements = quadratic_refinements(g)?;
    let even = refinements.iter().filter(|q| q.arf() == 0).count();
    Ok(SpInfo {
        g,
        order: sp.order(),
        order_formula: sp_order_formula(g),
        transvections: transvections(g)?.len(),
        symplectic_pairs: symplectic_pair_count(g),
        refinements_even: even,
        refinements_odd: refinements.len() - even,
    })
}

/// The refinement-action maps Sp(2,𝔽₂) → S₃ and Sp(4,𝔽₂) → S₆.
pub fn iso_check(g: usize, ceiling: usize) -> Result<CheckReport> {
    let iso = iso_to_symmetric(g, ceiling)?;
    let mut report = CheckReport::new("refinement_isomorphism").param("g", g);
    report.count("arf_class", iso.arf_class);
    report.count("forms", iso.forms.len());
    report.count("group_order", iso.group_order);
    report.count("image_order", iso.image_order);
    report.count("injective", iso.injective);
    report.count("homomorphism", iso.homomorphism);
    report.expect(iso.is_isomorphism(), || {
        format!(
            "map to S{} is not an isomorphism (image order {})",
            iso.forms.len(),
            iso.image_order
        )
    });
    Ok(report)
}

/// Braid and BKL relation suite as a check report.
pub fn relation_check(n: usize) -> Result<CheckReport> {
    let suite = relation_suite(n)?;
    let mut report = CheckReport::new("relation_suite").param("n", n);
    for (label, kind) in [
        ("artin_braid", RelationKind::ArtinBraid),
        ("far_commutation", RelationKind::FarCommutation),
        ("bkl_braid", RelationKind::BklBraid),
        ("bkl_commutation", RelationKind::BklCommutation),
        ("partial_commutation", RelationKind::PartialCommutation),
    ] {
        report.count(label, suite.count(kind));
    }
    for c in suite.checks.iter().filter(|c| c.kind == RelationKind::PartialCommutation) {
        report.count("epsilon", &c.relation);
    }
    for f in suite.failures() {
        report.fail(format!("{:?} fails: {}", f.kind, f.relation));
    }
    Ok(report)
}
