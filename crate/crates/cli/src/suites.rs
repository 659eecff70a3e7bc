//! Check suites behind the CLI verbs.

use std::time::{Duration, Instant};

use drinfeld::{double_h, verify_double_presentation};
use exactlin::Scalar;
use hopf_core::{verify_hopf, verify_hopf_with, AxiomReport, VerifyMode};
use kashina::{
    antipode_matches_closed_form, closure_order, dual_generators, exhaustive_automorphism_search, kashina_h, mono,
    verify_automorphism_table,
};
use liftings::{
    compare_zero_parameter, family, flip_sign, lifting_report, seeded_flip, verify_parameter_isomorphism,
    LiftingParams, ParamMap, VarSystem, Variant, FAMILIES,
};
use nichols::{eigen_one_infinite, find_diagonal_basis, nichols_dim, pair_table_sweep, BraidedSpace, Verdict};
use presentations::{build_report, Presentation};
use simples::{all_simples, census, Family as RepFamily};
use ydcat::{
    braiding, character_braiding_scalar, character_coaction_index, compare_closed_form, verify_twist_claims, YDModule,
};

use crate::report::CheckRecord;

const VARIANTS: [Variant; 3] = [Variant::AsWritten, Variant::Completed, Variant::Corrected];

fn acc(n: usize) -> String {
    format!("acceptance/{n}")
}

fn rec(name: impl Into<String>, anchor: impl Into<String>, pass: bool, witness: impl Into<String>) -> CheckRecord {
    CheckRecord::new(name, anchor, pass, witness)
}

/// Check names carry no whitespace.
fn slug(s: &str) -> String {
    s.split_whitespace().collect()
}

fn axiom_witness(r: &AxiomReport) -> String {
    if r.pass() {
        let methods: std::collections::BTreeSet<&str> = r.checks.iter().map(|c| c.method.as_str()).collect();
        format!("{} axiom checks ({})", r.checks.len(), methods.into_iter().collect::<Vec<_>>().join(", "))
    } else {
        r.failures().iter().map(|c| format!("{} fails at {:?}", c.name, c.witness)).collect::<Vec<_>>().join("; ")
    }
}

fn runtime(name: &str, anchor: &str, elapsed: Duration, limit: Duration) -> CheckRecord {
    rec(name, anchor, elapsed < limit, format!("{} ms (limit {} ms)", elapsed.as_millis(), limit.as_millis()))
}

pub fn kashina_suite() -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let start = Instant::now();
    let kh = kashina_h();
    let ax = verify_hopf_with(&kh.hopf, VerifyMode::Exhaustive);
    let s_ok = antipode_matches_closed_form(kh);
    let elapsed = start.elapsed();
    let a1 = acc(1);
    out.push(rec("kashina.dim", &a1, kh.hopf.dim == 16, format!("dim {}", kh.hopf.dim)));
    out.push(rec("kashina.axioms", &a1, ax.pass(), axiom_witness(&ax)));
    let st = kh.hopf.antipode_of(&mono(0, 0, 1)).map(|v| kh.hopf.show(&v)).unwrap_or_else(|| "no antipode".into());
    out.push(rec("kashina.antipode_t", &a1, s_ok, format!("S(t) = {st}")));
    out.push(runtime("kashina.runtime", &a1, elapsed, Duration::from_secs(1)));

    let a2 = acc(2);
    let dg = dual_generators(kh);
    for (name, ok) in &dg.checks {
        out.push(rec(format!("dual.{}", slug(name)), &a2, *ok, "by convolution in H*"));
    }
    let dax = verify_hopf(&dg.dual);
    out.push(rec("dual.hopf", &a2, dax.pass(), axiom_witness(&dax)));

    let a3 = acc(3);
    let table = verify_automorphism_table(kh);
    let bad: Vec<usize> = table.iter().filter(|(_, r)| !r.is_isomorphism()).map(|(i, _)| *i).collect();
    out.push(rec(
        "auts.table",
        &a3,
        table.len() == 64 && bad.is_empty(),
        format!("{} entries, failing {:?}", table.len(), bad),
    ));
    match exhaustive_automorphism_search(kh, false) {
        Ok(s) => out.push(rec(
            "auts.search",
            &a3,
            s.total == 64 && s.matches_table,
            format!("{} Hopf automorphisms found, equal to the table: {}", s.total, s.matches_table),
        )),
        Err(e) => out.push(rec("auts.search", &a3, false, e.to_string())),
    }
    let gens = [2, 5, 13, 17, 33];
    let (o1, o2) = (closure_order(&gens), closure_order(&gens));
    out.push(rec(
        "auts.closure",
        &a3,
        o1 == o2,
        format!("group generated by tau{gens:?} has order {o1} (repeat: {o2}); Z4xZ2xZ4xZ2xZ2 would have order 128"),
    ));
    out
}

pub fn double_suite(verify: bool) -> Vec<CheckRecord> {
    let a = acc(4);
    let start = Instant::now();
    let d = double_h();
    let mut out = vec![rec("double.dim", &a, d.hopf.dim == 256, format!("dim {}", d.hopf.dim))];
    if verify {
        let ax = verify_hopf(&d.hopf);
        out.push(rec("double.axioms", &a, ax.pass(), axiom_witness(&ax)));
        for c in verify_double_presentation(d).checks {
            out.push(rec(format!("double.rel.{}", slug(&c.name)), &a, c.pass, c.name.clone()));
        }
    }
    out.push(runtime("double.runtime", &a, start.elapsed(), Duration::from_secs(60)));
    out
}

pub fn simples_suite(full: bool) -> Vec<CheckRecord> {
    if !full {
        let reps = all_simples();
        let bad: Vec<String> = reps.iter().filter(|r| !r.satisfies_relations()).map(|r| r.name()).collect();
        return vec![
            rec("simples.count", "simples", reps.len() == 88, format!("{} modules", reps.len())),
            rec("simples.relations", "simples", bad.is_empty(), format!("failing {bad:?}")),
        ];
    }
    let a = acc(5);
    let start = Instant::now();
    let r = census();
    let elapsed = start.elapsed();
    let n = r.names.len();
    vec![
        rec("simples.one_dim", &a, r.one_dim == 32, format!("{} one-dimensional", r.one_dim)),
        rec("simples.two_dim", &a, r.two_dim == 56, format!("{} two-dimensional", r.two_dim)),
        rec("simples.total", &a, n == 88, format!("{n} classes")),
        rec("simples.relations", &a, r.relations_ok, "all modules satisfy the relations of D"),
        rec("simples.simple", &a, r.all_simple, "no proper invariant subspace"),
        rec(
            "simples.intertwiner_sweep",
            &a,
            r.iso_pairs.is_empty(),
            format!("{} ordered pairs swept, isomorphic distinct pairs {:?}", n * n, r.iso_pairs),
        ),
        rec(
            "simples.sum_of_squares",
            &a,
            r.sum_of_squares == 256,
            format!("{}·1² + {}·2² = {}", r.one_dim, r.two_dim, r.sum_of_squares),
        ),
        runtime("simples.runtime", &a, elapsed, Duration::from_secs(120)),
    ]
}

pub fn yd_suite(catalog: bool) -> Vec<CheckRecord> {
    let a = acc(6);
    let mut out = Vec::new();
    let reps = all_simples();
    let mut mods = Vec::new();
    let mut bad = Vec::new();
    for r in &reps {
        match YDModule::from_rep(r) {
            Ok(m) => mods.push((r, m)),
            Err(e) => bad.push(format!("{}: {e}", r.name())),
        }
    }
    out.push(rec("yd.all", &a, bad.is_empty(), format!("{} of {} are YD modules {bad:?}", mods.len(), reps.len())));

    let mut wrong = Vec::new();
    for (r, m) in mods.iter().filter(|(r, _)| r.family == RepFamily::Character) {
        let [i, j, k, l] = [r.index[0], r.index[1], r.index[2], r.index[3]];
        let g = character_coaction_index(j, k, l);
        let coact_ok = (0..16).all(|h| m.coaction[h].get(0, 0) == &if h == g { Scalar::one() } else { Scalar::zero() });
        let braid_ok = braiding(m, m).get(0, 0) == &character_braiding_scalar(i, j, k);
        if !(coact_ok && braid_ok) {
            wrong.push(r.name());
        }
    }
    out.push(rec(
        "yd.characters",
        &a,
        wrong.is_empty(),
        format!("coaction x^(j+2k+2l) y^k and braiding (-1)^(ij+jk) for all characters; mismatches {wrong:?}"),
    ));

    let mut differing = Vec::new();
    let mut unexpected = Vec::new();
    for (r, m) in &mods {
        let Some(c) = compare_closed_form(r, m) else { continue };
        if !c.matches {
            differing.push(format!("{} {:?}", r.name(), c.differing));
            let odd_v = r.family == RepFamily::V && r.index[2] % 2 == 1;
            if !(odd_v && c.differing == vec![(1, 0)]) {
                unexpected.push(r.name());
            }
        }
    }
    out.push(rec(
        "yd.closed_forms",
        &a,
        unexpected.is_empty(),
        format!(
            "{} modules differ from the closed forms, all in the v1-component of δ(v2) of odd-k V modules: {}",
            differing.len(),
            differing.join(", ")
        ),
    ));

    if catalog {
        let a10 = acc(10);
        for c in verify_twist_claims() {
            let ok = c.holds && c.witness.as_ref().is_some_and(|w| w.inverse().is_some());
            let w = if ok {
                format!("invertible YD morphism {:?}", c.witness.as_ref().map(|m| m.to_rows()))
            } else {
                format!("twist is isomorphic to {:?}, not {}", c.isomorphic_to, c.target)
            };
            out.push(rec(format!("yd.twist.{}^tau{}~{}", c.source, c.tau, c.target), &a10, ok, w));
        }
    }
    out
}

fn nichols_record(bs: &BraidedSpace, cap: usize, anchor: &str) -> CheckRecord {
    let r = nichols_dim(bs, cap);
    let settled = match &r.verdict {
        Verdict::Finite { .. } | Verdict::InfiniteByEigenOne { .. } => true,
        Verdict::Undetermined { .. } => r.ranks.iter().all(|&x| x > 0),
    };
    rec(
        format!("nichols.{}", r.module),
        anchor,
        r.braid_equation && settled,
        format!(
            "ranks {:?}; {:?}; dim ker(1+c) = {}; braid equation {}",
            r.ranks,
            r.verdict,
            r.quadratic_relations.len(),
            r.braid_equation
        ),
    )
}

/// One braided space by catalog name (sums with `+`).
pub fn nichols_module(name: &str, cap: usize) -> Result<Vec<CheckRecord>, String> {
    let bs = BraidedSpace::by_name(name).map_err(|e| e.to_string())?;
    let mut r = nichols_record(&bs, cap, "nichols");
    // the full report, machine-readable
    r.witness = serde_json::to_string(&nichols_dim(&bs, cap)).expect("report serializes");
    Ok(vec![r])
}

pub fn nichols_suite(cap: usize) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let a7 = acc(7);
    let start = Instant::now();
    for i in 1..=8 {
        let r = nichols_dim(&BraidedSpace::by_name(&format!("V{i}")).expect("catalog"), cap);
        out.push(rec(format!("nichols.V{i}.dim"), &a7, r.total() == Some(2), format!("ranks {:?}", r.ranks)));
    }
    for i in 1..=12 {
        let r = nichols_dim(&BraidedSpace::by_name(&format!("M{i}")).expect("catalog"), cap);
        out.push(rec(
            format!("nichols.M{i}.dim"),
            &a7,
            r.total() == Some(4) && r.quadratic_relations.len() == 3,
            format!("ranks {:?}, dim ker(1+c) = {}", r.ranks, r.quadratic_relations.len()),
        ));
    }
    let spaces: Vec<(simples::Rep, BraidedSpace)> = all_simples()
        .into_iter()
        .filter_map(|r| YDModule::from_rep(&r).ok().map(|m| (r, BraidedSpace::from_yd(&m))))
        .collect();
    let not_braided: Vec<String> = spaces.iter().filter(|(_, b)| !b.braid_equation()).map(|(r, _)| r.name()).collect();
    out.push(rec(
        "nichols.braid_equation",
        &a7,
        not_braided.is_empty() && spaces.len() == 88,
        format!("{} self-braidings checked, failing {not_braided:?}", spaces.len()),
    ));
    out.push(runtime("nichols.runtime", &a7, start.elapsed(), Duration::from_secs(60)));

    let a8 = acc(8);
    let mut chars = (0, Vec::new());
    let mut diag = (0, Vec::new());
    let mut w_bad = Vec::new();
    let mut w_count = 0;
    for (r, b) in &spaces {
        let one = Scalar::one();
        if r.family == RepFamily::Character && b.c.get(0, 0) == &one {
            chars.0 += 1;
            if eigen_one_infinite(b).is_none() {
                chars.1.push(r.name());
            }
        }
        if find_diagonal_basis(b).is_some_and(|(_, dd)| dd.vertices.contains(&one)) {
            diag.0 += 1;
            if eigen_one_infinite(b).is_none() {
                diag.1.push(r.name());
            }
        }
        if matches!(r.family, RepFamily::W1 | RepFamily::W2 | RepFamily::W3 | RepFamily::W4) {
            w_count += 1;
            let ranks = nichols::nichols_ranks(b, 6);
            if ranks.len() != 6 || ranks.contains(&0) {
                w_bad.push(format!("{} {:?}", r.name(), ranks));
            }
        }
    }
    out.push(rec(
        "nichols.eigen_one.characters",
        &a8,
        chars.1.is_empty(),
        format!("{} characters with braiding scalar 1, without witness {:?}", chars.0, chars.1),
    ));
    out.push(rec(
        "nichols.eigen_one.diagonal",
        &a8,
        diag.1.is_empty(),
        format!("{} spaces with a vertex 1, without witness {:?}", diag.0, diag.1),
    ));
    out.push(rec(
        "nichols.W.ranks",
        &a8,
        w_bad.is_empty() && w_count > 0,
        format!("{w_count} W modules, ranks through degree 6 positive; failing {w_bad:?}"),
    ));

    let t = pair_table_sweep();
    out.push(rec(
        "nichols.pair_table",
        acc(9),
        t.matches_claim,
        format!(
            "{} admissible ordered pairs; listed cases rejected by the sweep {:?}; {} admissible unordered pairs not listed, e.g. {:?}",
            t.admissible_ordered.len(),
            t.claimed_rejected,
            t.unlisted_admissible.len(),
            t.unlisted_admissible.iter().take(4).collect::<Vec<_>>()
        ),
    ));
    out
}

/// Tries the variants in order until one passes; the record passes iff the
/// presentation as written does.
fn side_by_side(mut attempt: impl FnMut(Variant) -> (bool, String)) -> (bool, String) {
    let mut parts = Vec::new();
    let mut first = None;
    for v in VARIANTS {
        let (ok, s) = attempt(v);
        first.get_or_insert(ok);
        parts.push(s);
        if ok {
            break;
        }
    }
    (first.unwrap_or(false), parts.join(" | "))
}

fn samples(f: &str) -> Vec<(&'static str, LiftingParams)> {
    vec![
        ("zeros", LiftingParams::zero(f)),
        ("ones", LiftingParams::all(f, Scalar::one()).expect("family")),
        ("mixed", LiftingParams::mixed(f).expect("family")),
    ]
}

/// Every family at all-zero, all-one and mixed parameters.
pub fn lifting_grid() -> Vec<CheckRecord> {
    let a = acc(11);
    let start = Instant::now();
    let mut out = Vec::new();
    for f in FAMILIES {
        for (label, p) in samples(f.id) {
            let (ok, w) = side_by_side(|v| match lifting_report(&p.clone().with_variant(v)) {
                Ok(r) => (r.pass(), r.summary()),
                Err(e) => (false, format!("{} [{}]: {e}", p.show(), v.name())),
            });
            out.push(rec(format!("lifting.{}.{label}", f.id), &a, ok, w));
        }
    }
    out.push(runtime("lifting.runtime", &a, start.elapsed(), Duration::from_secs(180)));
    out
}

pub fn zero_compare_all() -> Vec<CheckRecord> {
    FAMILIES.iter().map(|f| zero_compare(f.id)).collect()
}

pub fn zero_compare(id: &str) -> CheckRecord {
    let (ok, w) = side_by_side(|v| match compare_zero_parameter(id, v) {
        Ok(z) => (z.pass(), z.summary()),
        Err(e) => (false, format!("{id} [{}]: {e}", v.name())),
    });
    rec(format!("zero.{id}"), acc(12), ok, w)
}

pub fn lifting_single(p: &LiftingParams, verify: bool) -> Vec<CheckRecord> {
    let name = format!("lifting.{}", p.family);
    match lifting_report(p) {
        Ok(r) => {
            let built = r.build.confluent && r.build.dim == Some(r.expected_dim) && r.build.coproduct_ok == Some(true);
            let mut w = r.summary();
            if let Some(c) = &r.completion {
                w.push_str(&format!("; completion kept {:?}, combined {:?}, added {:?}", c.kept, c.combined, c.added));
            }
            let mut out = vec![rec(format!("{name}.build"), "liftings", built, w)];
            if verify {
                let ax = r.axioms.as_ref().map(axiom_witness).unwrap_or_else(|| "not built".into());
                out.push(rec(format!("{name}.hopf"), "liftings", r.pass(), format!("{ax}; {:.2} s", r.seconds)));
            }
            out
        }
        Err(e) => vec![rec(format!("{name}.build"), "liftings", false, e.to_string())],
    }
}

fn iso_record(
    name: &str,
    src: LiftingParams,
    tgt: LiftingParams,
    map: ParamMap,
    satisfying: bool,
    anchor: &str,
) -> CheckRecord {
    match verify_parameter_isomorphism(&src, &tgt, &map) {
        Ok(r) => {
            let ok = if satisfying { r.var_holds && r.is_isomorphism() } else { !r.var_holds && !r.algebra_map };
            rec(name, anchor, ok, r.summary())
        }
        Err(e) => rec(name, anchor, false, e.to_string()),
    }
}

pub fn iso_checks() -> Vec<CheckRecord> {
    let a = acc(13);
    let s = Scalar::int;
    let u6 = |vals: &[(&str, Scalar)]| LiftingParams::new("U6", vals).with_variant(Variant::Completed);
    let u13 = |vals: &[(&str, Scalar)]| LiftingParams::new("U13", vals).with_variant(Variant::Corrected);
    vec![
        iso_record(
            "iso.U6.satisfying",
            u6(&[]),
            u6(&[]),
            ParamMap::diagonal(1, s(2), s(3), s(1), VarSystem::Diagonal2),
            true,
            &a,
        ),
        iso_record(
            "iso.U6.violating",
            u6(&[("lambda", s(1))]),
            u6(&[]),
            ParamMap::diagonal(1, s(1), s(1), s(1), VarSystem::Diagonal2),
            false,
            &a,
        ),
        iso_record(
            "iso.U13.satisfying",
            u13(&[]),
            u13(&[]),
            ParamMap::diagonal(13, s(2), s(-1), s(-1), VarSystem::Diagonal3),
            true,
            &a,
        ),
        iso_record(
            "iso.U13.violating",
            u13(&[("alpha", s(1))]),
            u13(&[]),
            ParamMap::diagonal(13, s(1), s(1), s(-1), VarSystem::Diagonal3),
            false,
            &a,
        ),
    ]
}

/// A mixing map between U2 members that violates the six-parameter system.
pub fn var7_check() -> CheckRecord {
    let p = LiftingParams::all("U2", Scalar::one()).expect("U2").with_variant(Variant::Corrected);
    let one = Scalar::one();
    iso_record(
        "iso.U2.mixing_violating",
        p.clone(),
        p,
        ParamMap::mixing(1, one.clone(), one.clone(), one.clone(), Scalar::int(2)),
        false,
        "liftings",
    )
}

pub fn mutation_checks(seed: Option<u64>) -> Vec<CheckRecord> {
    let a = acc(14);
    let pres = family("U1_1").and_then(|f| f.presentation(&[], false));
    let pres = match pres {
        Ok(p) => p,
        Err(e) => return vec![rec("mutation.U1_1", &a, false, e.to_string())],
    };
    let (base, _) = build_report(pres.clone());
    let mut out = vec![rec(
        "mutation.U1_1.baseline",
        &a,
        base.confluent && base.coproduct_ok == Some(true),
        format!("unmutated: confluent {}, coproduct {:?}, dim {:?}", base.confluent, base.coproduct_ok, base.dim),
    )];
    let rel = pres.relations.iter().position(|r| r.text.starts_with("pq + qp"));
    out.push(match rel.map(|i| flip_sign(&pres, i, 1)) {
        Some(Ok(m)) => rec(
            "mutation.U1_1",
            &a,
            m.detected(),
            format!(
                "`{}` became `{}`: {}",
                m.relation,
                m.mutated,
                m.build.error.clone().unwrap_or_else(|| "builds".into())
            ),
        ),
        Some(Err(e)) => rec("mutation.U1_1", &a, false, e.to_string()),
        None => rec("mutation.U1_1", &a, false, "relation pq + qp not found"),
    });
    if let Some(seed) = seed {
        out.push(seeded_mutation(&pres, seed));
    }
    out
}

pub fn seeded_mutation(pres: &Presentation, seed: u64) -> CheckRecord {
    let name = format!("mutation.{}.seed{seed}", pres.name);
    match seeded_flip(pres, seed) {
        Ok(m) => rec(
            name,
            "liftings",
            m.detected(),
            format!(
                "`{}` became `{}`: {}",
                m.relation,
                m.mutated,
                m.build.error.clone().unwrap_or_else(|| "still builds".into())
            ),
        ),
        Err(e) => rec(name, "liftings", false, e.to_string()),
    }
}

/// A presentation read from a file.
pub fn presentation_checks(pres: Presentation, verify: bool) -> Vec<CheckRecord> {
    let name = format!("presentation.{}", slug(&pres.name));
    let (b, h) = build_report(pres);
    let built =
        b.confluent && b.coproduct_ok == Some(true) && b.counit_ok != Some(false) && b.antipode_solved == Some(true);
    let w = b.error.clone().unwrap_or_else(|| format!("dim {:?}, {} rules", b.dim, b.rules.len()));
    let mut out = vec![rec(format!("{name}.build"), "presentations", built, w)];
    if verify {
        out.push(match h {
            Some(h) => {
                let ax = verify_hopf(&h);
                rec(format!("{name}.hopf"), "presentations", ax.pass(), axiom_witness(&ax))
            }
            None => rec(format!("{name}.hopf"), "presentations", false, "not built"),
        });
    }
    out
}
