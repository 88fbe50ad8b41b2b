use std::path::Path;

use serde_json::{json, Value};

use hyperlie::catalog::{
    build_gl, build_sl, cp_structure_gl, cp_structure_sl, gl_to_gl_plus2, gl_to_sl, hypercomplex_sl_c,
    sasaki_basis, sasaki_j, sasaki_sl3, sigma_matrix, sl_to_sl_plus2, table_algebra, CpAlgebra, SasakiFamily,
    SlBlocks, SlIndex,
};
use hyperlie::connections::{
    closed_form_nu, closed_form_xi, cp_connection, embed_mu, obata_connection, restrict_and_flatness,
    DerivativeMode, NuSign, Side,
};
use hyperlie::hkt::{
    gl2c_shape_family, hermitian_family, hkt_constrain, hkt_constrain_triples, pd_feasibility,
    subalgebra_restriction_check, Feasibility,
};
use hyperlie::holonomy::{
    ambrose_singer, complexified_holonomy_check, cp_holonomy, match_theorem44, quaternionic_classify,
    semidirect_report,
};
use hyperlie::liealg::{vector, AlgebraFile, FieldTag, LieAlgebra, MatrixAlgebra, Subspace};
use hyperlie::scalars::{GaussRational, Rational, Ring};
use hyperlie::sl3proof::{replay_case, verify_equivalence_ii_iii};
use hyperlie::structures::{complexified_hypercomplex, induced_hypercomplex, integrability_identity_failure, is_complex_structure, minus_i_eigenspace};

use crate::report::{Checks, Report};

type Outcome = Result<Report, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn jacobi_ok<S: Ring>(l: &LieAlgebra<S>) -> bool {
    l.check_jacobi().is_empty()
}

pub fn catalog_verify(n: usize) -> Outcome {
    let mut c = Checks::default();
    let sl = build_sl(2 * n).map_err(err)?;
    let gl = build_gl(2 * n).map_err(err)?;
    let mut jacobi = serde_json::Map::new();
    for (name, ok) in [
        (format!("sl({})", 2 * n + 1), jacobi_ok(&sl.algebra.algebra)),
        (format!("gl({})", 2 * n), jacobi_ok(&gl.algebra.algebra)),
    ] {
        c.require(ok, format!("Jacobi fails on {name}"));
        jacobi.insert(name, ok.into());
    }
    for f in [SasakiFamily::I(()), SasakiFamily::II] {
        let t = table_algebra(&f).map_err(err)?;
        let ok = t.check_jacobi().is_empty();
        c.require(ok, format!("Jacobi fails on table {}", f.tag()));
        jacobi.insert(format!("table {}", f.tag()), ok.into());
    }

    let mut structures = Vec::new();
    for alg in [cp_structure_sl(n), cp_structure_gl(n)] {
        let alg = alg.map_err(err)?;
        let identity = integrability_identity_failure(alg.lie(), &alg.cp.j);
        c.require(identity.is_none(), format!("integrability identity fails on {} at {identity:?}", alg.name));
        structures.push(json!({"algebra": alg.name, "complex_product": true, "identity_failure": identity}));
    }

    let l = sasaki_sl3::<Rational>();
    let lc = sasaki_sl3::<GaussRational>();
    let mut sasaki = Vec::new();
    let families = [
        SasakiFamily::I(GaussRational::zero()),
        SasakiFamily::I(GaussRational::real(Rational::new(1, 2))),
        SasakiFamily::I("(1+i)/3".parse().map_err(err)?),
        SasakiFamily::II,
        SasakiFamily::III,
    ];
    for f in &families {
        let j = sasaki_j(f).map_err(err)?;
        let complex = is_complex_structure(&l.algebra, &j);
        let span = Subspace::from_vectors(8, sasaki_basis(f).iter().map(|m| lc.coords(m).expect("traceless")));
        let eigen = minus_i_eigenspace(&lc.algebra, &j).map(|m| m.same_span(&span)).unwrap_or(false);
        let label = match f {
            SasakiFamily::I(z) => format!("I({z})"),
            other => other.tag().to_string(),
        };
        c.require(complex, format!("sasaki J for {label} is not a complex structure"));
        c.require(eigen, format!("-i eigenspace for {label} differs from the basis span"));
        sasaki.push(json!({"family": label, "complex_structure": complex, "eigenspace_matches_basis": eigen}));
    }

    let mut inclusions = Vec::new();
    for inc in [gl_to_sl(n), sl_to_sl_plus2(n), gl_to_gl_plus2(n)] {
        let r = inc.map_err(err)?.check().map_err(err)?;
        c.require(r.holds(), format!("inclusion {} fails", r.name));
        inclusions.push(serde_json::to_value(&r).map_err(err)?);
    }

    let eq = verify_equivalence_ii_iii().map_err(err)?;
    c.require(eq.passed, "II and III are not equivalent");
    Ok(Report::new(
        "catalog-verify",
        json!({
            "n": n,
            "jacobi": jacobi,
            "complex_product": structures,
            "sasaki": sasaki,
            "inclusions": inclusions,
            "equivalence_ii_iii": eq,
        }),
        c.0,
    ))
}

fn table_json(algebra: &LieAlgebra<impl Ring>, labels: &[&str]) -> Value {
    let mut out = serde_json::Map::new();
    for i in 0..8 {
        for j in i + 1..8 {
            let terms = algebra.bracket_basis(i, j);
            if terms.is_empty() {
                continue;
            }
            let rhs: Vec<Value> = terms.iter().map(|(k, c)| json!([labels[*k], c.to_string()])).collect();
            out.insert(format!("[{},{}]", labels[i], labels[j]), rhs.into());
        }
    }
    out.into()
}

const LABELS: [&str; 8] = ["U", "X", "Y", "Z", "U^s", "X^s", "Y^s", "Z^s"];

pub fn sasaki_tables(lambda: Option<GaussRational>) -> Outcome {
    let mut c = Checks::default();
    let i = table_algebra(&SasakiFamily::I(())).map_err(err)?;
    let ii = table_algebra(&SasakiFamily::II).map_err(err)?;
    let Some(lambda) = lambda else {
        for t in [&i, &ii] {
            c.require(t.check_jacobi().is_empty(), format!("Jacobi fails on table {}", t.family));
        }
        let payload = json!({
            "mode": "symbolic",
            "relation": "delta (1 - lambda conj(lambda)) = 1",
            "I": table_json(&i.algebra, &LABELS),
            "II": table_json(&ii.algebra, &LABELS),
        });
        return Ok(Report::new("sasaki-tables", payload, c.0));
    };
    let inst = i.instantiate(&lambda).map_err(err)?;
    c.require(jacobi_ok(&inst), "Jacobi fails on the instantiated table");
    let mut basis = sasaki_basis(&SasakiFamily::I(lambda.clone()));
    let sb: Vec<_> = basis.iter().map(sigma_matrix).collect();
    basis.extend(sb);
    let matrices = MatrixAlgebra::new(basis).map_err(err)?;
    let rescaled = i.rescaled().map_err(err)?.instantiate(&i, &lambda).map_err(err)?;
    let realized = rescaled.entries() == matrices.algebra.entries();
    c.require(realized, "rescaled table differs from the matrix commutators");
    let payload = json!({
        "mode": "instantiated",
        "lambda": lambda,
        "I": table_json(&inst, &LABELS),
        "rescaled_squares": hyperlie::catalog::RESCALE_SQUARES,
        "matrix_realization": realized,
    });
    Ok(Report::new("sasaki-tables", payload, c.0))
}

fn mu_coords(alg: &CpAlgebra, v: &[Rational]) -> Option<Vec<Rational>> {
    alg.algebra.coords(&embed_mu(v))
}

pub fn connection_check(n: usize) -> Outcome {
    let mut c = Checks::default();
    let alg = cp_structure_sl(n).map_err(err)?;
    let l = alg.lie();
    let conn = cp_connection(l, &alg.cp);
    let torsion_free = c.require(conn.is_torsion_free(l), "connection has torsion");
    let parallel_j = c.require(conn.is_parallel(&alg.cp.j), "J is not parallel");
    let parallel_e = c.require(conn.is_parallel(&alg.cp.e), "E is not parallel");
    let mut flat = serde_json::Map::new();
    for side in [Side::Plus, Side::Minus] {
        let r = restrict_and_flatness(l, &alg.cp, side).map_err(err)?;
        c.require(r.flat && r.torsion_free, format!("{side:?} side is not flat and torsion-free"));
        flat.insert(format!("{side:?}").to_lowercase(), json!({"dim": r.dim, "flat": r.flat, "torsion_free": r.torsion_free}));
    }

    let idx = SlIndex { n };
    let (h, d) = (idx.half(), alg.dim());
    let blocks: Vec<SlBlocks<Rational>> =
        (0..d).map(|k| SlBlocks::split(&alg.algebra.matrix(&vector::unit(d, k)))).collect();
    let mut xi_mismatch = 0usize;
    let mut same_side = 0usize;
    let mut nu_mismatch = 0usize;
    let mut nu_checked = 0usize;
    for x in 0..h {
        for y in 0..h {
            let r = conn.curvature_basis(l, x, idx.minus(y));
            for z in 0..h {
                let xi = closed_form_xi(&blocks[x], &blocks[idx.minus(y)], &blocks[z]);
                if Some(r.column(z)) != mu_coords(&alg, &xi) {
                    xi_mismatch += 1;
                }
            }
            for (a, b) in [(x, y), (idx.minus(x), idx.minus(y))] {
                if !conn.curvature_basis(l, a, b).is_zero() {
                    same_side += 1;
                }
            }
        }
    }
    for u in 0..d {
        let sign = if u < h { NuSign::Plus } else { NuSign::Minus };
        for x in 0..h {
            for y in 0..h {
                let dr = conn.cov_deriv_curvature(
                    l,
                    &vector::unit(d, u),
                    &vector::unit(d, x),
                    &vector::unit(d, idx.minus(y)),
                    DerivativeMode::Commutator,
                );
                for z in 0..h {
                    nu_checked += 1;
                    let nu = closed_form_nu(sign, &blocks[u], &blocks[x], &blocks[idx.minus(y)], &blocks[z]);
                    if Some(dr.column(z)) != mu_coords(&alg, &nu) {
                        nu_mismatch += 1;
                    }
                }
            }
        }
    }
    c.require(xi_mismatch == 0, format!("{xi_mismatch} curvature triples differ from xi"));
    c.require(same_side == 0, format!("{same_side} same-side curvatures are nonzero"));
    c.require(nu_mismatch == 0, format!("{nu_mismatch} derivative tuples differ from nu"));
    Ok(Report::new(
        "connection-check",
        json!({
            "n": n,
            "algebra": alg.name,
            "torsion_free": torsion_free,
            "parallel_j": parallel_j,
            "parallel_e": parallel_e,
            "flatness": flat,
            "xi": {"triples": h * h * h, "mismatches": xi_mismatch},
            "same_side_curvature_nonzero": same_side,
            "nu": {"mode": DerivativeMode::Commutator, "tuples": nu_checked, "mismatches": nu_mismatch},
        }),
        c.0,
    ))
}

pub fn holonomy(target: &str, n: usize) -> Outcome {
    let mut c = Checks::default();
    match target {
        "cp" => {
            let alg = cp_structure_sl(n).map_err(err)?;
            let h = cp_holonomy(&alg);
            let expected = 2 * n * n * (n + 1);
            let theorem = c.require(match_theorem44(&h, &alg.cp, n), "holonomy differs from the commutant space");
            let r = semidirect_report(&h, n);
            c.require(r.ideal_abelian && r.ideal_is_ideal && r.shape_match && r.bracket_law, "semidirect structure fails");
            c.require(h.dim() == expected, format!("dimension {} but expected {expected}", h.dim()));
            Ok(Report::new(
                "holonomy",
                json!({"target": "cp", "n": n, "algebra": alg.name, "dim": h.dim(), "commutant_match": theorem, "semidirect": r}),
                c.0,
            ))
        }
        "obata" => {
            let (alg, ih) = hypercomplex_sl_c(n).map_err(err)?;
            let ob = ambrose_singer(&ih.algebra, &obata_connection(&ih.algebra, &ih.structure));
            let cp = cp_holonomy(&alg);
            let q = quaternionic_classify(&ob.basis_ops, &ih.structure).map_err(err)?;
            let complexified = complexified_holonomy_check(&cp, &ih, &ob);
            c.require(ob.dim() == 2 * cp.dim(), format!("dimension {} is not twice {}", ob.dim(), cp.dim()));
            c.require(complexified, "Obata holonomy is not the complexified holonomy");
            c.require(q.in_gl_h && q.in_v, "holonomy is not in the GL(n,C) block of gl(n,H)");
            c.require(!q.in_sl_h && q.witness.is_some(), "no trace witness outside sl(n,H)");
            Ok(Report::new(
                "holonomy",
                json!({
                    "target": "obata",
                    "n": n,
                    "dim": ob.dim(),
                    "cp_dim": cp.dim(),
                    "complexified": complexified,
                    "quaternionic": q,
                }),
                c.0,
            ))
        }
        other => Err(format!("unknown target {other}")),
    }
}

fn feasibility_json(f: &Feasibility) -> Value {
    match f {
        Feasibility::Infeasible(cert) => json!({"result": "infeasible", "certificate": cert}),
        Feasibility::Feasible(g) => json!({"result": "feasible", "witness": g}),
        Feasibility::Undetermined => json!({"result": "undetermined"}),
    }
}

/// Passes when the HKT system has no positive-definite solution, with a
/// certificate that holds on sampled members.
pub fn hkt_check(algebra: &str, n: usize) -> Outcome {
    let mut c = Checks::default();
    let (algebra_r, structure, extra) = match algebra {
        "gl2c" => {
            let alg = cp_structure_gl(n).map_err(err)?;
            let (algebra, structure) = complexified_hypercomplex(alg.lie(), &alg.cp).map_err(err)?;
            let mut extra = json!({"algebra": format!("gl({},C)_R", 2 * n)});
            if n == 1 {
                let fam = hermitian_family(&structure);
                let shape = fam.same_family(&gl2c_shape_family());
                let reduced = hkt_constrain_triples(&algebra, &structure, &fam, &[(0, 1, 2), (0, 1, 3), (0, 1, 7), (1, 2, 3)]);
                c.require(shape, "hermitian family differs from the displayed shape");
                extra["displayed_shape"] = shape.into();
                extra["four_triples"] = json!({"family_dim": reduced.dim(), "feasibility": feasibility_json(&pd_feasibility(&reduced))});
            }
            (algebra, structure, extra)
        }
        "sl2n1c" => {
            let (_, ih) = hypercomplex_sl_c(n).map_err(err)?;
            let inc = gl_to_sl(n).map_err(err)?;
            let hs = induced_hypercomplex(inc.source.lie(), &inc.source.cp).map_err(err)?;
            let p = inc.complexified(&hs, &ih);
            let r = subalgebra_restriction_check(&ih.algebra, &ih.structure, &p).map_err(err)?;
            c.require(r.compatible, "restriction to gl(2n,C) is not compatible");
            (ih.algebra, ih.structure, json!({"algebra": format!("sl({},C)_R", 2 * n + 1), "restriction": r}))
        }
        other => return Err(format!("unknown algebra {other}")),
    };
    let fam = hermitian_family(&structure);
    let hkt = hkt_constrain(&algebra_r, &structure, &fam);
    let feasibility = pd_feasibility(&hkt);
    let mut payload = json!({
        "n": n,
        "dim": algebra_r.dim(),
        "hermitian_dim": fam.dim(),
        "hkt_dim": hkt.dim(),
        "feasibility": feasibility_json(&feasibility),
    });
    if let Value::Object(m) = extra {
        payload.as_object_mut().expect("object").extend(m);
    }
    match feasibility {
        Feasibility::Infeasible(cert) => {
            let samples = (0..hkt.dim()).map(|k| hkt.member(&vector::unit(hkt.dim(), k)));
            let ok = std::iter::once(hkt.member(&vec![Rational::zero(); hkt.dim()])).chain(samples).all(|g| cert.verify(&g));
            c.require(ok, "certificate fails on a family member");
            Ok(Report::new("hkt-check", payload, c.0))
        }
        Feasibility::Feasible(_) => {
            c.0.push("a positive-definite HKT metric exists".into());
            Ok(Report::new("hkt-check", payload, c.0))
        }
        Feasibility::Undetermined => Ok(Report::undetermined("hkt-check", payload, "no certificate and no witness".into())),
    }
}

pub fn sl3_proof(family: &str) -> Outcome {
    let families: Vec<SasakiFamily<()>> = match family {
        "I" => vec![SasakiFamily::I(())],
        "II" => vec![SasakiFamily::II],
        "all" => vec![SasakiFamily::I(()), SasakiFamily::II],
        other => return Err(format!("unknown family {other}")),
    };
    let mut c = Checks::default();
    let mut cases = Vec::new();
    for f in &families {
        for r in replay_case(f, f).map_err(err)? {
            for s in r.steps.iter().filter(|s| !s.passed) {
                c.0.push(format!("{} {:?}: {} {}", r.family, r.branch, s.label, s.diagnostic.clone().unwrap_or_default()));
            }
            c.require(r.contradiction, format!("{} {:?} reaches no contradiction", r.family, r.branch));
            cases.push(r);
        }
    }
    Ok(Report::new("sl3-proof", json!({"family": family, "cases": cases}), c.0))
}

pub fn equivalence_ii_iii() -> Outcome {
    let r = verify_equivalence_ii_iii().map_err(err)?;
    let diagnostics = if r.passed { Vec::new() } else { vec![format!("mismatched pairs {:?}", r.mismatches)] };
    Ok(Report::new("equivalence-ii-iii", serde_json::to_value(&r).map_err(err)?, diagnostics))
}

/// Algebras by name: `sl<m>`, `gl<m>`, `sl<2n+1>c`, `gl<2n>c`, `table-I:<λ>`,
/// `table-II`, and holonomy bases `holonomy-cp:<n>`, `holonomy-obata:<n>`.
fn export_object(name: &str) -> Result<(String, Value), String> {
    let size = |s: &str| s.parse::<usize>().map_err(|_| format!("bad size in {name}"));
    let rational = |l: &LieAlgebra<Rational>| AlgebraFile::from_algebra(l, FieldTag::Rational).to_json();
    let half = |m: usize| if m.is_multiple_of(2) && m > 0 { Ok(m / 2) } else { Err(format!("{name} needs an even size")) };
    let text = if let Some(rest) = name.strip_prefix("holonomy-") {
        let (target, n) = rest.split_once(':').ok_or_else(|| format!("{name} needs :<n>"))?;
        let n = size(n)?;
        let h = match target {
            "cp" => cp_holonomy(&cp_structure_sl(n).map_err(err)?),
            "obata" => {
                let (_, ih) = hypercomplex_sl_c(n).map_err(err)?;
                ambrose_singer(&ih.algebra, &obata_connection(&ih.algebra, &ih.structure))
            }
            other => return Err(format!("unknown holonomy target {other}")),
        };
        serde_json::to_string_pretty(&h.export()).map_err(err)?
    } else if let Some(lambda) = name.strip_prefix("table-I:") {
        let z: GaussRational = lambda.parse().map_err(err)?;
        let l = table_algebra(&SasakiFamily::I(())).map_err(err)?.instantiate(&z).map_err(err)?;
        AlgebraFile::from_algebra(&l.with_labels(LABELS.map(String::from).to_vec()).map_err(err)?, FieldTag::Gauss).to_json()
    } else if name == "table-II" {
        let l = table_algebra(&SasakiFamily::II).map_err(err)?.instantiate(&GaussRational::zero()).map_err(err)?;
        AlgebraFile::from_algebra(&l.with_labels(LABELS.map(String::from).to_vec()).map_err(err)?, FieldTag::Gauss).to_json()
    } else if let Some(m) = name.strip_suffix('c') {
        let ih = if let Some(m) = m.strip_prefix("sl") {
            let m = size(m)?;
            hypercomplex_sl_c(half(m.saturating_sub(1))?).map_err(err)?.1
        } else if let Some(m) = m.strip_prefix("gl") {
            let alg = cp_structure_gl(half(size(m)?)?).map_err(err)?;
            induced_hypercomplex(alg.lie(), &alg.cp).map_err(err)?
        } else {
            return Err(format!("unknown object {name}"));
        };
        rational(&ih.algebra)
    } else if let Some(m) = name.strip_prefix("sl") {
        let m = size(m)?;
        rational(&build_sl(m.checked_sub(1).ok_or("sl needs m >= 2")?).map_err(err)?.algebra.algebra)
    } else if let Some(m) = name.strip_prefix("gl") {
        rational(&build_gl(size(m)?).map_err(err)?.algebra.algebra)
    } else {
        return Err(format!("unknown object {name}"));
    };
    let value: Value = serde_json::from_str(&text).map_err(err)?;
    Ok((text, value))
}

pub fn export(object: &str, out: &Path) -> Outcome {
    let (text, value) = export_object(object)?;
    std::fs::write(out, &text).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    let dim = value.get("dim").cloned().unwrap_or(Value::Null);
    Ok(Report::new("export", json!({"object": object, "out": out.display().to_string(), "dim": dim}), Vec::new()))
}

pub fn import(path: &Path) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    match AlgebraFile::import(&text) {
        Ok(imported) => {
            let (field, dim, entries) = match imported {
                hyperlie::liealg::Imported::Rational(l) => ("Q", l.dim(), l.entries().len()),
                hyperlie::liealg::Imported::Gauss(l) => ("Qi", l.dim(), l.entries().len()),
            };
            Ok(Report::new("import", json!({"field": field, "dim": dim, "nonzero_constants": entries, "jacobi": true}), Vec::new()))
        }
        Err(e) => Ok(Report::new("import", json!({"path": path.display().to_string()}), vec![e.to_string()])),
    }
}
