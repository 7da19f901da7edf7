//! Acceptance suite: one verdict line per criterion, all checks exact.
//!
//! Runs as a plain binary (`harness = false`) so the nine lines print in order. Exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use xmodkit_cli::{run_command, Report, EXIT_CHECK_FAILED};
use xmodkit_core::cohomology::{
    ce_differential, cohomology_dim, connecting_hom, enveloping_skeletal, index_tuples,
    is_coboundary, splice, splice_report, Cochain, ModuleSES,
};
use xmodkit_core::crossed::morphism::{cocomod_morphism, group_xmod_morphism};
use xmodkit_core::crossed::{
    check_hopf_xmod, check_lie_two_alg, check_lie_xmod, check_precat1, check_two_group,
    group_xmod_iso_witness, group_xmod_isomorphism, lie_xmod_iso_witness, liexmod_round_trip_iso,
    liexmod_to_2lie, two_group_iso_witness, two_lie_iso_witness, twogroup_round_trip_iso,
    twogroup_to_xmod, twolie_round_trip_iso, twolie_to_liexmod, xmod_round_trip_iso,
    xmod_to_2group, GroupXMod, HopfXMod, LieXMod,
};
use xmodkit_core::document::{parse_document, Document};
use xmodkit_core::enveloping::{enveloping_axioms, UEnvelope};
use xmodkit_core::functors::{
    cat1_round_trip, character_chain_report, convolution_laws, degree_one_identity_witness,
    fun_morphism, functor_chi, functor_fun, functor_kg, functor_p_enveloping, functor_u,
    generator_coords, grouplike_xmod, u_p_round_trip_with_maps,
};
use xmodkit_core::group::FinGroup;
use xmodkit_core::hopf::{primitives, FinDimHopf};
use xmodkit_core::lie::{FinLieAlgebra, LieModule};
use xmodkit_core::linalg::{inverse, LinComb, SparseMat};
use xmodkit_core::report::CheckReport;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> PathBuf {
    fixture_dir().join(name)
}

fn doc(name: &str) -> Document {
    let text = std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_document(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn group_xmod(name: &str) -> GroupXMod {
    match doc(name) {
        Document::GroupXMod(d) => d.build("").expect(name),
        other => panic!("{name} is a {}", other.kind()),
    }
}

fn lie_xmod(name: &str) -> LieXMod {
    match doc(name) {
        Document::LieXMod(d) => d.build("").expect(name),
        other => panic!("{name} is a {}", other.kind()),
    }
}

fn lie(name: &str) -> FinLieAlgebra {
    match doc(name) {
        Document::LieAlgebra(d) => d.build("").expect(name),
        other => panic!("{name} is a {}", other.kind()),
    }
}

const GROUP_FIXTURES: [&str; 4] = [
    "a3_s3_xmod.json",
    "s3_identity_xmod.json",
    "c3_identity_xmod.json",
    "c2_terminal_xmod.json",
];
const LIE_FIXTURES: [&str; 3] = [
    "heis3_xmod.json",
    "affine2_ideal_xmod.json",
    "sl2_zero_module_xmod.json",
];

/// Fails with the first failing check of `report`.
fn require(what: &str, report: &CheckReport) -> Result<(), String> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!(
            "{what}: {} fails at {}",
            c.name,
            c.witness.clone().unwrap_or_default()
        )),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(what: &str, start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let ux = functor_u(&lie_xmod("heis3_xmod.json")).map_err(|e| e.to_string())?;
    let report = check_hopf_xmod(&HopfXMod::Enveloping(ux.clone()), 3);
    require("U(z -> heis3)", &report)?;
    ensure(degree_one_identity_witness(&ux).is_none(), || {
        "degree-one identities disagree".into()
    })?;
    let n_u = report.checks.len();
    within("U(z -> heis3)", start, Duration::from_secs(10))?;

    let start = Instant::now();
    let kx = functor_kg(&group_xmod("a3_s3_xmod.json")).map_err(|e| e.to_string())?;
    let Document::HopfXMod(shipped) = doc("ka3_ks3_xmod.json") else {
        return Err("wrong kind".into());
    };
    ensure(shipped.build("").map_err(|e| e.to_string())? == kx, || {
        "shipped kA3 -> kS3 differs from functor_kg".into()
    })?;
    let report = check_hopf_xmod(&HopfXMod::Finite(kx.clone()), 0);
    require("kA3 -> kS3", &report)?;
    for law in [
        "(i) module",
        "(i) module algebra",
        "(i) module coalgebra",
        "(ii) gamma is equivariant",
        "(iii) Peiffer identity",
    ] {
        ensure(report.passed(law), || {
            format!("kA3 -> kS3 did not run {law}")
        })?;
    }
    within("kA3 -> kS3", start, Duration::from_secs(10))?;
    Ok(format!(
        "U(z -> heis3) at PBW degree 3: {n_u} checks; kA3 -> kS3 over all {}x{} basis pairs",
        kx.h.dim(),
        kx.b.dim()
    ))
}

fn criterion_2() -> Verdict {
    let mut dims = Vec::new();
    for name in LIE_FIXTURES {
        let x = lie_xmod(name);
        let (report, rho, sigma) = u_p_round_trip_with_maps(&x, 3).map_err(|e| e.to_string())?;
        require(name, &report)?;
        ensure(report.passed("x ≅ P(U(x))"), || {
            format!("{name}: isomorphism not checked")
        })?;
        let invertible = |m: &SparseMat| inverse(m).ok().flatten().is_some();
        ensure(invertible(&rho) && invertible(&sigma), || {
            format!("{name}: carried matrices are singular")
        })?;
        dims.push(format!(
            "{}x{}/{}x{}",
            rho.rows(),
            rho.cols(),
            sigma.rows(),
            sigma.cols()
        ));
    }
    // the CLI path emits the same matrices
    let report = cli(&[
        "roundtrip",
        &arg("heis3_xmod.json"),
        "--path",
        "u.p",
        "--max-degree",
        "3",
    ]);
    ensure(
        report.exit_code == 0
            && report.artifacts.contains_key("rho")
            && report.artifacts.contains_key("sigma"),
        || "CLI round trip did not report its matrices".into(),
    )?;
    Ok(format!(
        "3 fixtures at degree 3, invertible carried matrices {}",
        dims.join(", ")
    ))
}

fn criterion_3() -> Verdict {
    for name in GROUP_FIXTURES {
        let x = group_xmod(name);
        let g = xmod_to_2group(&x).map_err(|e| e.to_string())?;
        require(name, &check_two_group(&g))?;
        let (y, incl) = twogroup_to_xmod(&g).map_err(|e| e.to_string())?;
        let (rho, sigma) = xmod_round_trip_iso(&x, &incl).map_err(|e| e.to_string())?;
        ensure(
            group_xmod_iso_witness(&x, &y, &rho, &sigma).is_none(),
            || format!("{name}: xmod round trip"),
        )?;
        let (f0, f1) = twogroup_round_trip_iso(&g, &incl);
        let back = xmod_to_2group(&y).map_err(|e| e.to_string())?;
        ensure(two_group_iso_witness(&back, &g, &f0, &f1).is_none(), || {
            format!("{name}: 2-group round trip")
        })?;
    }
    let mut lie_two = Vec::new();
    for name in LIE_FIXTURES {
        let x = lie_xmod(name);
        let g = liexmod_to_2lie(&x).map_err(|e| e.to_string())?;
        let (y, incl) = twolie_to_liexmod(&g).map_err(|e| e.to_string())?;
        let (rho, sigma) = liexmod_round_trip_iso(&x, &incl).map_err(|e| e.to_string())?;
        ensure(lie_xmod_iso_witness(&x, &y, &rho, &sigma).is_none(), || {
            format!("{name}: xmod round trip")
        })?;
        let (f0, f1) = twolie_round_trip_iso(&g, &incl);
        let back = liexmod_to_2lie(&y).map_err(|e| e.to_string())?;
        ensure(two_lie_iso_witness(&back, &g, &f0, &f1).is_none(), || {
            format!("{name}: 2-algebra round trip")
        })?;
        lie_two.push(g);
        lie_two.push(back);
    }
    let Document::LieTwoAlg(shipped) = doc("heis3_2lie.json") else {
        return Err("wrong kind".into());
    };
    lie_two.push(shipped.build("").map_err(|e| e.to_string())?);
    for g in &lie_two {
        let report = check_lie_two_alg(g);
        require("Lie 2-algebra", &report)?;
        ensure(report.passed("[ker s, ker t] = 0"), || {
            "kernel commutation not checked".into()
        })?;
    }
    let Document::TwoGroup(g18) = doc("two_group_18.json") else {
        return Err("wrong kind".into());
    };
    let g18 = g18.build("").map_err(|e| e.to_string())?;
    ensure(g18.g1().order() == 18, || {
        format!("arrow group has order {}", g18.g1().order())
    })?;
    let report = check_two_group(&g18);
    require("order-18 2-group", &report)?;
    ensure(report.passed("interchange law"), || {
        "interchange law not checked".into()
    })?;
    let pairs = g18.composable_pairs().len();
    Ok(format!(
        "{} group and {} Lie fixtures; kernels commute in {} Lie 2-algebras; interchange over {pairs} composable pairs",
        GROUP_FIXTURES.len(),
        LIE_FIXTURES.len(),
        lie_two.len()
    ))
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let x = group_xmod("a3_s3_xmod.json");
    let fx = functor_fun(&x).map_err(|e| e.to_string())?;
    let Document::CoComod(shipped) = doc("fun_s3_cocomod.json") else {
        return Err("wrong kind".into());
    };
    ensure(shipped.build("").map_err(|e| e.to_string())? == fx, || {
        "shipped Fun(A3 -> S3) differs".into()
    })?;
    let y = functor_chi(&fx).map_err(|e| e.to_string())?;
    let (rho, sigma) = group_xmod_isomorphism(&x, &y).ok_or("no isomorphism x -> chi(Fun(x))")?;
    require(
        "x -> chi(Fun(x))",
        &group_xmod_morphism(&x, &y, &rho, &sigma),
    )?;
    let (f_k, f_l) = fun_morphism(&y, &rho, &sigma).map_err(|e| e.to_string())?;
    require(
        "Fun of the isomorphism",
        &cocomod_morphism(
            &functor_fun(&y).map_err(|e| e.to_string())?,
            &fx,
            &f_k,
            &f_l,
        ),
    )?;
    let laws = convolution_laws(&fx).map_err(|e| e.to_string())?;
    require("convolution laws", &laws)?;
    for tag in ["(α)", "(β)", "(γ)", "(δ)"] {
        ensure(laws.checks.iter().any(|c| c.name.starts_with(tag)), || {
            format!("law {tag} missing")
        })?;
    }
    require(
        "character identities",
        &character_chain_report(&fx).map_err(|e| e.to_string())?,
    )?;
    within("functions on S3", start, Duration::from_secs(5))?;
    Ok(format!(
        "chi(Fun(A3 -> S3)) ≅ A3 -> S3; {} convolution laws exhaustive in {:?}",
        laws.checks.len(),
        start.elapsed()
    ))
}

fn criterion_5() -> Verdict {
    for name in GROUP_FIXTURES {
        let x = group_xmod(name);
        let y = grouplike_xmod(&functor_kg(&x).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let (rho, sigma) =
            group_xmod_isomorphism(&x, &y).ok_or_else(|| format!("{name}: no isomorphism"))?;
        require(name, &group_xmod_morphism(&x, &y, &rho, &sigma))?;
    }
    for g in [
        FinGroup::cyclic(2),
        FinGroup::cyclic(3),
        FinGroup::symmetric(3),
    ] {
        let p = primitives(&FinDimHopf::group_algebra(&g));
        ensure(p.is_empty(), || {
            format!("kG of order {} has {} primitives", g.order(), p.len())
        })?;
    }
    Ok(format!(
        "{} fixtures recovered from their group-likes; P(kG) = 0 for C2, C3, S3",
        GROUP_FIXTURES.len()
    ))
}

fn criterion_6() -> Verdict {
    let x = lie_xmod("heis3_xmod.json");
    let (y, report) = cat1_round_trip(&x, 3).map_err(|e| e.to_string())?;
    require("cat1 route", &report)?;
    for law in ["s∘e = id", "t∘e = id", "Lie-level isomorphism"] {
        ensure(report.passed(law), || format!("{law} not checked"))?;
    }
    require("output", &check_hopf_xmod(&HopfXMod::Enveloping(y), 3))?;
    let Document::PreCat1(shipped) = doc("heis3_precat1.json") else {
        return Err("wrong kind".into());
    };
    let p = shipped.build("").map_err(|e| e.to_string())?;
    let shipped_report = check_precat1(&p, 3);
    require("shipped pre-cat1 object", &shipped_report)?;
    Ok(format!(
        "output ≅ U(z -> heis3) through {} checks; shipped pre-cat1 laws at degree 3",
        report.checks.len()
    ))
}

/// `d(d(c)) = 0` for every basis cochain of degree 0 and 1.
fn d_squared(g: &FinLieAlgebra, m: &LieModule) -> Result<usize, String> {
    let mut count = 0;
    for p in 0..2 {
        for t in index_tuples(g.dim(), p) {
            for k in 0..m.dim() {
                let c = Cochain::new(p, g.dim(), m.dim(), vec![(t.clone(), LinComb::basis(k))])
                    .map_err(|e| e.to_string())?;
                let dd =
                    ce_differential(g, m, &ce_differential(g, m, &c).map_err(|e| e.to_string())?)
                        .map_err(|e| e.to_string())?;
                ensure(dd.is_zero(), || format!("d² ≠ 0 at {t:?}, v{k}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn ses(g: &FinLieAlgebra, name: &str) -> Result<ModuleSES, String> {
    match doc(name) {
        Document::Ses(s) => s.build("", g).map_err(|e| e.to_string()),
        other => Err(format!("{name} is a {}", other.kind())),
    }
}

fn criterion_7() -> Verdict {
    let start = Instant::now();
    let g = lie("heis3.json");
    let Document::Module(k) = doc("heis3_trivial_module.json") else {
        return Err("wrong kind".into());
    };
    let k = k.build("", &g).map_err(|e| e.to_string())?;
    let nonsplit = ses(&g, "heis3_nonsplit_ses.json")?;
    let split = ses(&g, "heis3_split_ses.json")?;
    let mut cochains = d_squared(&g, &k)?;
    for s in [&nonsplit, &split] {
        for m in [&s.v, &s.i, &s.q] {
            cochains += d_squared(&g, m)?;
        }
    }
    let h3 = cohomology_dim(&g, &k, 3).map_err(|e| e.to_string())?;
    ensure(h3 == 1, || format!("dim H³(heis3, k) = {h3}"))?;

    let Document::Cocycle(alpha) = doc("alpha_yz.json") else {
        return Err("wrong kind".into());
    };
    let alpha = alpha.build("").map_err(|e| e.to_string())?;
    let lift = nonsplit.default_lift();
    let other_lift = lift
        .add(
            &nonsplit
                .inject
                .mul(&SparseMat::from_int_rows(&[&[5]]))
                .map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
    let theta = connecting_hom(&g, &nonsplit, &alpha, Some(&lift)).map_err(|e| e.to_string())?;
    let theta2 =
        connecting_hom(&g, &nonsplit, &alpha, Some(&other_lift)).map_err(|e| e.to_string())?;
    ensure(
        is_coboundary(&g, &nonsplit.v, &theta.sub(&theta2)).map_err(|e| e.to_string())?,
        || "θ - θ' is not a coboundary".into(),
    )?;
    ensure(
        !is_coboundary(&g, &nonsplit.v, &theta).map_err(|e| e.to_string())?,
        || "θ is exact; fixture should give a nonzero class".into(),
    )?;

    let x = splice(&g, &nonsplit, &alpha).map_err(|e| e.to_string())?;
    require("splice", &check_lie_xmod(&x))?;
    require(
        "splice kernel and cokernel",
        &splice_report(&g, &nonsplit, &x),
    )?;
    let e = enveloping_skeletal(&g, &nonsplit, &alpha).map_err(|e| e.to_string())?;
    require(
        "enveloping splice",
        &check_hopf_xmod(&HopfXMod::Enveloping(e.clone()), 3),
    )?;
    let (y, b_basis, h_basis) = functor_p_enveloping(&e, 3).map_err(|e| e.to_string())?;
    let rho = generator_coords(&e.b, &b_basis).map_err(|e| e.to_string())?;
    let sigma = generator_coords(&e.h, &h_basis).map_err(|e| e.to_string())?;
    ensure(lie_xmod_iso_witness(&x, &y, &rho, &sigma).is_none(), || {
        "P does not recover the splice".into()
    })?;
    within("cohomology suite", start, Duration::from_secs(30))?;
    Ok(format!("d² = 0 on {cochains} basis cochains; dim H³ = 1; lift-independent nonzero θ; splice recovered in {:?}", start.elapsed()))
}

fn arg(name: &str) -> String {
    fixture(name).display().to_string()
}

fn cli(args: &[&str]) -> Report {
    let argv = ["xmodkit", "--report", "json"]
        .iter()
        .chain(args)
        .map(|s| s.to_string());
    let outcome = run_command(argv);
    // the JSON report parses back without loss
    let parsed: Report = serde_json::from_str(&outcome.render()).expect("JSON report parses");
    assert_eq!(parsed, outcome.report);
    outcome.report
}

fn criterion_8() -> Verdict {
    let runs = [
        vec!["check".to_string(), arg("bad_peiffer.json")],
        vec!["check".to_string(), arg("bad_derivation_xmod.json")],
        vec![
            "splice".to_string(),
            arg("heis3.json"),
            arg("heis3_split_ses.json"),
            arg("nonclosed_alpha.json"),
        ],
    ];
    let mut witnesses = Vec::new();
    for argv in &runs {
        let args: Vec<&str> = argv.iter().map(String::as_str).collect();
        let report = cli(&args);
        ensure(report.exit_code == EXIT_CHECK_FAILED, || {
            format!("{argv:?} exited {}", report.exit_code)
        })?;
        let (_, check) = report
            .first_failure()
            .ok_or_else(|| format!("{argv:?}: no failing check"))?;
        let w = check
            .witness
            .clone()
            .filter(|w| !w.is_empty())
            .ok_or_else(|| format!("{argv:?}: no witness"))?;
        witnesses.push(format!("{}: {w}", check.name));
    }
    Ok(witnesses.join("; "))
}

fn criterion_9() -> Verdict {
    let start = Instant::now();
    let mut finite = 0;
    for name in GROUP_FIXTURES {
        let x = group_xmod(name);
        let kx = functor_kg(&x).map_err(|e| e.to_string())?;
        let fx = functor_fun(&x).map_err(|e| e.to_string())?;
        for (what, h) in [
            ("kM", &kx.b),
            ("kN", &kx.h),
            ("Fun(N)", &fx.k),
            ("Fun(M)", &fx.l),
        ] {
            require(&format!("{name} {what}"), &h.verify_hopf())?;
            finite += 1;
        }
    }
    let mut enveloping = 0;
    for name in LIE_FIXTURES {
        let ux = functor_u(&lie_xmod(name)).map_err(|e| e.to_string())?;
        for u in [&ux.b, &ux.h] {
            require(
                &format!("{name} enveloping algebra"),
                &enveloping_axioms(u, 3, 64, 1),
            )?;
            enveloping += 1;
        }
    }
    let sl2 = UEnvelope::new(lie("sl2.json"));
    let report = enveloping_axioms(&sl2, 4, 256, 7);
    require("U(sl2)", &report)?;
    ensure(report.passed("antipode convolution identity"), || {
        "antipode identity not checked".into()
    })?;
    within("Hopf kernel", start, Duration::from_secs(60))?;
    Ok(format!(
        "{finite} finite and {enveloping} enveloping algebras verified; U(sl2) on all {} monomials of degree <= 4",
        sl2.monomials_up_to(4).len()
    ))
}

/// Every shipped fixture is used above.
fn fixtures_are_all_referenced() -> Result<(), String> {
    let source = include_str!("acceptance.rs");
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir())
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok()?.file_name().into_string().ok())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    let missing: Vec<&String> = names
        .iter()
        .filter(|n| !source.contains(&format!("\"{n}\"")))
        .collect();
    ensure(missing.is_empty(), || {
        format!("unreferenced fixtures: {missing:?}")
    })
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "Hopf crossed module laws for U(z -> heis3) and kA3 -> kS3",
            criterion_1,
        ),
        ("P(U(x)) ≅ x with explicit matrices", criterion_2),
        (
            "crossed modules and strict 2-objects round trip",
            criterion_3,
        ),
        (
            "characters of Fun(A3 -> S3) and the convolution laws",
            criterion_4,
        ),
        ("group-likes of kG and primitives of kG", criterion_5),
        ("pre-cat1 route returns U(z -> heis3)", criterion_6),
        ("cohomology, connecting map and splice", criterion_7),
        ("negative fixtures exit 1 with witnesses", criterion_8),
        (
            "Hopf axioms on every emitted algebra and U(sl2)",
            criterion_9,
        ),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match verdict {
            Ok(detail) => println!("criterion {}: PASS  {name} [{t:.2?}] {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{t:.2?}] {why}", k + 1);
            }
        }
    }
    if let Err(why) = fixtures_are_all_referenced() {
        failed += 1;
        println!("fixture corpus: FAIL  {why}");
    }
    if failed > 0 {
        println!("{failed} acceptance check(s) failed");
        std::process::exit(1);
    }
    println!("all 9 criteria pass");
}
