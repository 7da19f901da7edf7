//! One function per subcommand. Each fills the report; errors abort the command.

use std::fs;
use std::path::{Path, PathBuf};

use xmodkit_core::cohomology::{
    ce_differential, closedness_witness, cohomology_dim, connecting_hom, index_tuples,
    is_coboundary, splice, splice_report, Cochain,
};
use xmodkit_core::crossed::morphism::{
    cocomod_morphism, finite_hopf_xmod_morphism, group_xmod_morphism, lie_xmod_morphism,
};
use xmodkit_core::crossed::{
    check_group_xmod, check_hopf_cocomod, check_hopf_xmod, check_lie_two_alg, check_lie_xmod,
    check_precat1, check_two_group, group_xmod_iso_witness, group_xmod_isomorphism,
    lie_xmod_iso_witness, liexmod_round_trip_iso, liexmod_to_2lie, two_group_iso_witness,
    two_lie_iso_witness, twogroup_round_trip_iso, twogroup_to_xmod, twolie_round_trip_iso,
    twolie_to_liexmod, xmod_round_trip_iso, xmod_to_2group, EnvelopingHopfXMod, GroupXMod,
    HopfXMod, PreCat1Hopf,
};
use xmodkit_core::document::{
    parse_document, rows_of, CoComodDoc, Document, GroupXModDoc, HopfXModDoc, LieTwoDoc,
    LieXModDoc, Rat, TwoGroupDoc,
};
use xmodkit_core::enveloping::enveloping_axioms;
use xmodkit_core::functors::{
    cat1_round_trip, cat1hopf_to_xmod, character_chain_report, convolution_laws,
    degree_one_identity_witness, fun_morphism, functor_chi, functor_fun, functor_kg,
    functor_p_finite, functor_u, grouplike_xmod, kg_morphism, u_p_round_trip_with_maps,
};
use xmodkit_core::hopf::FinDimHopf;
use xmodkit_core::lie::FinLieAlgebra;
use xmodkit_core::linalg::LinComb;
use xmodkit_core::report::CheckReport;
use xmodkit_core::Error;

use crate::report::{ErrorInfo, Report, EXIT_INPUT_ERROR};
use crate::{ConvertTarget, FunctorName, RoundTripPath};

/// Why a command stopped early.
#[derive(Debug)]
pub enum Abort {
    Core(Error),
    Input(ErrorInfo),
}

impl From<Error> for Abort {
    fn from(e: Error) -> Self {
        Abort::Core(e)
    }
}

impl Abort {
    pub fn record(self, report: &mut Report) {
        match self {
            Abort::Core(e) => {
                let (info, code) = ErrorInfo::from_core(&e);
                report.fail_with(info, code);
            }
            Abort::Input(info) => report.fail_with(info, EXIT_INPUT_ERROR),
        }
    }
}

pub type Outcome = std::result::Result<(), Abort>;

/// Seed and sample size for the associativity triples of enveloping-algebra axiom runs.
const AXIOM_SEED: u64 = 0x5eed;
const AXIOM_TRIPLES: usize = 64;

pub fn load(path: &Path) -> std::result::Result<Document, Abort> {
    let text = fs::read_to_string(path).map_err(|e| {
        Abort::Input(ErrorInfo::input(
            "io",
            format!("cannot read {}: {e}", path.display()),
        ))
    })?;
    parse_document(&text).map_err(|e| match e {
        Error::Schema { path: at, reason } => Abort::Input(ErrorInfo {
            kind: "schema".into(),
            message: format!("{}: schema error at {at}: {reason}", path.display()),
            path: Some(at),
            witness: None,
        }),
        other => Abort::Core(other),
    })
}

fn wrong_kind(doc: &Document, expected: &str) -> Abort {
    Abort::Input(ErrorInfo::input(
        "wrong_kind",
        format!("expected a {expected} document, found {}", doc.kind()),
    ))
}

fn load_lie(path: &Path) -> std::result::Result<FinLieAlgebra, Abort> {
    match load(path)? {
        Document::LieAlgebra(d) => Ok(d.build("")?),
        other => Err(wrong_kind(&other, "lie_algebra")),
    }
}

fn write_output(report: &mut Report, output: Option<&PathBuf>, doc: &Document) -> Outcome {
    report.artifact("output", doc.to_value());
    if let Some(path) = output {
        fs::write(path, doc.to_json_pretty() + "\n").map_err(|e| {
            Abort::Input(ErrorInfo::input(
                "io",
                format!("cannot write {}: {e}", path.display()),
            ))
        })?;
        report.note(format!("wrote {}", path.display()));
    }
    Ok(())
}

fn passed(name: &str) -> CheckReport {
    let mut r = CheckReport::new();
    r.pass(name);
    r
}

fn hopf_section(report: &mut Report, name: &str, h: &FinDimHopf) {
    report.section(format!("Hopf axioms of {name}"), h.verify_hopf());
}

fn enveloping_sections(report: &mut Report, x: &EnvelopingHopfXMod, d: usize) {
    report.section(
        format!("Hopf axioms of U(m), degree <= {d}"),
        enveloping_axioms(&x.b, d, AXIOM_TRIPLES, AXIOM_SEED),
    );
    report.section(
        format!("Hopf axioms of U(n), degree <= {d}"),
        enveloping_axioms(&x.h, d, AXIOM_TRIPLES, AXIOM_SEED),
    );
}

pub fn check(
    report: &mut Report,
    file: &Path,
    lie: Option<&Path>,
    module: Option<&Path>,
    d: usize,
) -> Outcome {
    let doc = load(file)?;
    match &doc {
        Document::Group(g) => {
            let g = g.build("")?;
            report.artifact("order", g.order());
            report.section("group", passed("closure, associativity, unit and inverses"));
        }
        Document::LieAlgebra(g) => {
            let g = g.build("")?;
            report.artifact("dim", g.dim());
            let mut r = CheckReport::new();
            r.pass("antisymmetry");
            r.pass("Jacobi identity");
            report.section("Lie algebra", r);
        }
        Document::Hopf(h) => hopf_section(report, "H", &h.build("")?),
        Document::Module(m) => {
            let g = load_lie(lie.ok_or_else(|| needs("module", "--lie"))?)?;
            m.build("", &g)?;
            report.section("module", passed("ρ([x, y]) = [ρ(x), ρ(y)]"));
        }
        Document::Ses(s) => {
            let g = load_lie(lie.ok_or_else(|| needs("ses", "--lie"))?)?;
            s.build("", &g)?;
            report.section(
                "short exact sequence",
                passed("equivariant, injective, surjective, exact in the middle"),
            );
        }
        Document::Cocycle(c) => {
            let g = load_lie(lie.ok_or_else(|| needs("cocycle", "--lie"))?)?;
            let Document::Module(q) = load(module.ok_or_else(|| needs("cocycle", "--module"))?)?
            else {
                return Err(Abort::Input(ErrorInfo::input(
                    "wrong_kind",
                    "--module must be a module document",
                )));
            };
            let q = q.build("module", &g)?;
            let alpha = c.build("")?;
            let mut r = CheckReport::new();
            r.record("dα = 0", closedness_witness(&g, &q, &alpha));
            report.section("cocycle", r);
        }
        Document::GroupXMod(x) => {
            report.section("group crossed module", check_group_xmod(&x.build("")?))
        }
        Document::LieXMod(x) => report.section("Lie crossed module", check_lie_xmod(&x.build("")?)),
        Document::HopfXMod(x) => {
            let x = x.build("")?;
            hopf_section(report, "B", &x.b);
            hopf_section(report, "H", &x.h);
            report.section(
                "Hopf crossed module",
                check_hopf_xmod(&HopfXMod::Finite(x), d),
            );
        }
        Document::CoComod(x) => {
            let x = x.build("")?;
            hopf_section(report, "K", &x.k);
            hopf_section(report, "L", &x.l);
            report.section("crossed comodule", check_hopf_cocomod(&x));
        }
        Document::TwoGroup(g) => report.section("2-group", check_two_group(&g.build("")?)),
        Document::LieTwoAlg(g) => report.section("Lie 2-algebra", check_lie_two_alg(&g.build("")?)),
        Document::PreCat1(p) => {
            let p = p.build("")?;
            report.section(
                format!("pre-cat1 Hopf algebra, degree <= {d}"),
                check_precat1(&p, d),
            );
        }
    }
    Ok(())
}

fn needs(kind: &str, flag: &str) -> Abort {
    Abort::Input(ErrorInfo::input(
        "usage",
        format!("checking a {kind} document needs {flag}"),
    ))
}

pub fn convert(
    report: &mut Report,
    file: &Path,
    to: ConvertTarget,
    output: Option<&PathBuf>,
) -> Outcome {
    let doc = load(file)?;
    let out = match (to, &doc) {
        (ConvertTarget::TwoGroup, Document::GroupXMod(x)) => {
            let g = xmod_to_2group(&x.build("")?)?;
            report.section("2-group", check_two_group(&g));
            Document::TwoGroup(TwoGroupDoc::from_two_group(&g))
        }
        (ConvertTarget::XMod, Document::TwoGroup(g)) => {
            let (x, incl) = twogroup_to_xmod(&g.build("")?)?;
            report.artifact("kernel_inclusion", incl);
            report.section("group crossed module", check_group_xmod(&x));
            Document::GroupXMod(GroupXModDoc::from_xmod(&x))
        }
        (ConvertTarget::TwoLie, Document::LieXMod(x)) => {
            let g = liexmod_to_2lie(&x.build("")?)?;
            report.section("Lie 2-algebra", check_lie_two_alg(&g));
            Document::LieTwoAlg(LieTwoDoc::from_lie_two(&g))
        }
        (ConvertTarget::LieXMod, Document::LieTwoAlg(g)) => {
            let (x, incl) = twolie_to_liexmod(&g.build("")?)?;
            report.artifact("kernel_inclusion", rows_of(&incl));
            report.section("Lie crossed module", check_lie_xmod(&x));
            Document::LieXMod(LieXModDoc::from_xmod(&x))
        }
        (to, doc) => {
            let expected = match to {
                ConvertTarget::TwoGroup => "group_xmod",
                ConvertTarget::XMod => "two_group",
                ConvertTarget::TwoLie => "lie_xmod",
                ConvertTarget::LieXMod => "lie_two_alg",
            };
            return Err(wrong_kind(doc, expected));
        }
    };
    write_output(report, output, &out)
}

pub fn functor(
    report: &mut Report,
    file: &Path,
    apply: FunctorName,
    d: usize,
    output: Option<&PathBuf>,
) -> Outcome {
    let doc = load(file)?;
    match (apply, &doc) {
        (FunctorName::U, Document::LieXMod(x)) => {
            let ux = functor_u(&x.build("")?)?;
            report.artifact(
                "gamma",
                ux.gamma
                    .iter()
                    .map(|p| ux.h.label_poly(p))
                    .collect::<Vec<_>>(),
            );
            let mut degree_one = CheckReport::new();
            degree_one.record(
                "equivariance on generators agrees with the Lie identity",
                degree_one_identity_witness(&ux),
            );
            report.section("degree one", degree_one);
            report.section(
                format!("Hopf crossed module, PBW degree <= {d}"),
                check_hopf_xmod(&HopfXMod::Enveloping(ux.clone()), d),
            );
            enveloping_sections(report, &ux, d.min(3));
        }
        (FunctorName::P, Document::HopfXMod(x)) => {
            let y = functor_p_finite(&x.build("")?)?;
            report.section("Lie crossed module of primitives", check_lie_xmod(&y));
            write_output(
                report,
                output,
                &Document::LieXMod(LieXModDoc::from_xmod(&y)),
            )?;
        }
        (FunctorName::Kg, Document::GroupXMod(x)) => {
            let y = functor_kg(&x.build("")?)?;
            hopf_section(report, "kM", &y.b);
            hopf_section(report, "kN", &y.h);
            report.section(
                "Hopf crossed module",
                check_hopf_xmod(&HopfXMod::Finite(y.clone()), d),
            );
            write_output(
                report,
                output,
                &Document::HopfXMod(HopfXModDoc::from_xmod(&y)),
            )?;
        }
        (FunctorName::Grouplikes, Document::HopfXMod(x)) => {
            let y = grouplike_xmod(&x.build("")?)?;
            report.section("group crossed module of group-likes", check_group_xmod(&y));
            write_output(
                report,
                output,
                &Document::GroupXMod(GroupXModDoc::from_xmod(&y)),
            )?;
        }
        (FunctorName::Kfun, Document::GroupXMod(x)) => {
            let y = functor_fun(&x.build("")?)?;
            hopf_section(report, "Fun(N)", &y.k);
            hopf_section(report, "Fun(M)", &y.l);
            report.section("crossed comodule", check_hopf_cocomod(&y));
            report.section("convolution laws", convolution_laws(&y)?);
            report.section("character identities", character_chain_report(&y)?);
            write_output(
                report,
                output,
                &Document::CoComod(CoComodDoc::from_cocomod(&y)),
            )?;
        }
        (FunctorName::Chi, Document::CoComod(x)) => {
            let x = x.build("")?;
            report.section("convolution laws", convolution_laws(&x)?);
            let y = functor_chi(&x)?;
            report.section("group crossed module of characters", check_group_xmod(&y));
            write_output(
                report,
                output,
                &Document::GroupXMod(GroupXModDoc::from_xmod(&y)),
            )?;
        }
        (FunctorName::Cat1, Document::PreCat1(p)) => {
            let p = p.build("")?;
            cat1_from_precat1(report, &p, d, output)?;
        }
        (FunctorName::Cat1, Document::LieXMod(x)) => {
            let x = x.build("")?;
            let (y, round_trip) = cat1_round_trip(&x, d.min(3))?;
            report.section("comparison with U(x)", round_trip);
            write_output(
                report,
                output,
                &Document::LieXMod(LieXModDoc::from_xmod(&y.lie)),
            )?;
        }
        (apply, doc) => {
            let expected = match apply {
                FunctorName::U => "lie_xmod",
                FunctorName::P | FunctorName::Grouplikes => "hopf_xmod",
                FunctorName::Kg | FunctorName::Kfun => "group_xmod",
                FunctorName::Chi => "cocomod",
                FunctorName::Cat1 => "precat1 or lie_xmod",
            };
            return Err(wrong_kind(doc, expected));
        }
    }
    Ok(())
}

fn cat1_from_precat1(
    report: &mut Report,
    p: &PreCat1Hopf,
    d: usize,
    output: Option<&PathBuf>,
) -> Outcome {
    let checked = d.min(2);
    report.section(
        format!("pre-cat1 laws, degree <= {checked}"),
        check_precat1(p, checked),
    );
    let y = cat1hopf_to_xmod(p, d)?;
    report.section(
        format!("Hopf crossed module, PBW degree <= {}", d.min(3)),
        check_hopf_xmod(&HopfXMod::Enveloping(y.clone()), d.min(3)),
    );
    write_output(
        report,
        output,
        &Document::LieXMod(LieXModDoc::from_xmod(&y.lie)),
    )
}

pub fn splice_cmd(
    report: &mut Report,
    g: &Path,
    ses: &Path,
    cocycle: &Path,
    output: Option<&PathBuf>,
) -> Outcome {
    let g = load_lie(g)?;
    let ses = match load(ses)? {
        Document::Ses(s) => s.build("", &g)?,
        other => return Err(wrong_kind(&other, "ses")),
    };
    let alpha = match load(cocycle)? {
        Document::Cocycle(c) => c.build("")?,
        other => return Err(wrong_kind(&other, "cocycle")),
    };
    if alpha.g_dim() != g.dim() || alpha.m_dim() != ses.q.dim() {
        return Err(Abort::Input(ErrorInfo::input(
            "dimension_mismatch",
            format!(
                "cocycle is on ({}, {}) but the Lie algebra and Q have dimensions ({}, {})",
                alpha.g_dim(),
                alpha.m_dim(),
                g.dim(),
                ses.q.dim()
            ),
        )));
    }
    let mut closed = CheckReport::new();
    closed.record("dα = 0", closedness_witness(&g, &ses.q, &alpha));
    report.section("cocycle", closed);
    if !report.all_passed() {
        return Ok(());
    }
    let theta = connecting_hom(&g, &ses, &alpha, None)?;
    report.artifact("theta", cochain_entries(&theta));
    report.note(if is_coboundary(&g, &ses.v, &theta)? {
        "the connecting class of α is zero in H³(g, V)"
    } else {
        "the connecting class of α is nonzero in H³(g, V)"
    });
    let x = splice(&g, &ses, &alpha)?;
    report.section("Lie crossed module", check_lie_xmod(&x));
    report.section("kernel and cokernel", splice_report(&g, &ses, &x));
    write_output(
        report,
        output,
        &Document::LieXMod(LieXModDoc::from_xmod(&x)),
    )
}

/// `[[i, j, ..], [coords]]` for the nonzero values of a cochain.
fn cochain_entries(c: &Cochain) -> Vec<(Vec<usize>, Vec<Rat>)> {
    c.entries()
        .map(|(t, v)| {
            (
                t.clone(),
                (0..c.m_dim()).map(|k| Rat(v.coeff(&k))).collect(),
            )
        })
        .collect()
}

pub fn cohomology(report: &mut Report, g: &Path, module: &Path, degree: usize) -> Outcome {
    let g = load_lie(g)?;
    let m = match load(module)? {
        Document::Module(m) => m.build("", &g)?,
        other => return Err(wrong_kind(&other, "module")),
    };
    let dim = cohomology_dim(&g, &m, degree)?;
    report.artifact("dim", dim);
    let mut squares = CheckReport::new();
    for p in 0..degree.min(2) {
        let witness = index_tuples(g.dim(), p)
            .into_iter()
            .flat_map(|t| (0..m.dim()).map(move |k| (t.clone(), k)))
            .find_map(|(t, k)| {
                let c =
                    Cochain::new(p, g.dim(), m.dim(), vec![(t.clone(), LinComb::basis(k))]).ok()?;
                let dd = ce_differential(&g, &m, &ce_differential(&g, &m, &c).ok()?).ok()?;
                (!dd.is_zero()).then(|| format!("{t:?} -> v{k}"))
            });
        squares.record(format!("d² = 0 on degree {p} basis cochains"), witness);
    }
    report.section("Chevalley-Eilenberg complex", squares);
    report.note(format!("dim H^{degree} = {dim}"));
    Ok(())
}

pub fn roundtrip(report: &mut Report, file: &Path, path: RoundTripPath, d: usize) -> Outcome {
    let doc = load(file)?;
    match (path, &doc) {
        (RoundTripPath::UP, Document::LieXMod(x)) => {
            let x = x.build("")?;
            let (r, rho, sigma) = u_p_round_trip_with_maps(&x, d)?;
            report.section(format!("x ≅ P(U(x)), PBW degree <= {d}"), r);
            report.artifact("rho", rows_of(&rho));
            report.artifact("sigma", rows_of(&sigma));
        }
        (RoundTripPath::KgGl, Document::GroupXMod(x)) => {
            let x = x.build("")?;
            let kx = functor_kg(&x)?;
            let y = grouplike_xmod(&kx)?;
            group_round_trip(report, &x, &y, "x ≅ grouplikes(kG(x))")?;
            if let Some((rho, sigma)) = group_xmod_isomorphism(&x, &y) {
                let (f_b, f_h) = kg_morphism(&y, &rho, &sigma)?;
                report.section(
                    "kG(x) -> kG(grouplikes(kG(x)))",
                    finite_hopf_xmod_morphism(&kx, &functor_kg(&y)?, &f_b, &f_h),
                );
            }
        }
        (RoundTripPath::KfunChi, Document::GroupXMod(x)) => {
            let x = x.build("")?;
            let y = functor_chi(&functor_fun(&x)?)?;
            group_round_trip(report, &x, &y, "x ≅ χ(Fun(x))")?;
            if let Some((rho, sigma)) = group_xmod_isomorphism(&x, &y) {
                let (f_k, f_l) = fun_morphism(&y, &rho, &sigma)?;
                report.section(
                    "Fun(χ(Fun(x))) -> Fun(x)",
                    cocomod_morphism(&functor_fun(&y)?, &functor_fun(&x)?, &f_k, &f_l),
                );
            }
        }
        (RoundTripPath::XModTwoGroup, Document::GroupXMod(x)) => {
            let x = x.build("")?;
            let g = xmod_to_2group(&x)?;
            report.section("2-group", check_two_group(&g));
            let (y, incl) = twogroup_to_xmod(&g)?;
            let (rho, sigma) = xmod_round_trip_iso(&x, &incl)?;
            let mut r = CheckReport::new();
            r.record(
                "carried isomorphism x -> xmod(2group(x))",
                group_xmod_iso_witness(&x, &y, &rho, &sigma),
            );
            report.section("crossed module round trip", r);
            report.section(
                "morphism squares",
                group_xmod_morphism(&x, &y, &rho, &sigma),
            );
            let (f0, f1) = twogroup_round_trip_iso(&g, &incl);
            let mut r = CheckReport::new();
            r.record(
                "carried isomorphism 2group(xmod(G)) -> G",
                two_group_iso_witness(&xmod_to_2group(&y)?, &g, &f0, &f1),
            );
            report.section("2-group round trip", r);
            report.artifact("rho", rho);
            report.artifact("sigma", sigma);
        }
        (RoundTripPath::XModTwoGroup, Document::LieXMod(x)) => {
            let x = x.build("")?;
            let g = liexmod_to_2lie(&x)?;
            report.section("Lie 2-algebra", check_lie_two_alg(&g));
            let (y, incl) = twolie_to_liexmod(&g)?;
            let (rho, sigma) = liexmod_round_trip_iso(&x, &incl)?;
            let mut r = CheckReport::new();
            r.record(
                "carried isomorphism x -> liexmod(2lie(x))",
                lie_xmod_iso_witness(&x, &y, &rho, &sigma),
            );
            report.section("crossed module round trip", r);
            report.section("morphism squares", lie_xmod_morphism(&x, &y, &rho, &sigma));
            let (f0, f1) = twolie_round_trip_iso(&g, &incl);
            let mut r = CheckReport::new();
            r.record(
                "carried isomorphism 2lie(liexmod(G)) -> G",
                two_lie_iso_witness(&liexmod_to_2lie(&y)?, &g, &f0, &f1),
            );
            report.section("Lie 2-algebra round trip", r);
            report.artifact("rho", rows_of(&rho));
            report.artifact("sigma", rows_of(&sigma));
        }
        (path, doc) => {
            let expected = match path {
                RoundTripPath::UP => "lie_xmod",
                RoundTripPath::KgGl | RoundTripPath::KfunChi => "group_xmod",
                RoundTripPath::XModTwoGroup => "group_xmod or lie_xmod",
            };
            return Err(wrong_kind(doc, expected));
        }
    }
    Ok(())
}

fn group_round_trip(report: &mut Report, x: &GroupXMod, y: &GroupXMod, name: &str) -> Outcome {
    let mut r = CheckReport::new();
    match group_xmod_isomorphism(x, y) {
        Some((rho, sigma)) => {
            r.pass(name);
            report.section("round trip", r);
            report.section("morphism squares", group_xmod_morphism(x, y, &rho, &sigma));
            report.artifact("rho", rho);
            report.artifact("sigma", sigma);
        }
        None => {
            r.fail(
                name,
                format!(
                    "no isomorphism between crossed modules of orders ({}, {}) and ({}, {})",
                    x.m().order(),
                    x.n().order(),
                    y.m().order(),
                    y.n().order()
                ),
            );
            report.section("round trip", r);
        }
    }
    Ok(())
}
