use super::*;
use crate::algebra::{q, Witness};
use crate::hamiltonian::poisson_bracket;

fn catalog() -> Vec<CatalogEntry> {
    let systems: Vec<(String, String)> =
        embedded::SYSTEMS.iter().map(|(n, s)| (n.to_string(), s.to_string())).collect();
    assemble(embedded::EXPECTED_TABLES, &systems).unwrap()
}

fn levels(s: &str) -> Vec<Vec<Vec<u32>>> {
    parse_spectral_type(s).unwrap().points.into_iter().map(|p| p.levels).collect()
}

fn pattern(s: &str) -> Vec<Q> {
    singularity_pattern(&parse_spectral_type(s).unwrap())
}

#[test]
fn nested_groups_give_refinement_levels() {
    assert_eq!(levels("((11))((1)(1))"), vec![vec![vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]]);
    let t = parse_spectral_type("31,22,22,1111").unwrap();
    assert_eq!(t.size(), 4);
    assert_eq!(pattern("31,22,22,1111"), vec![q(1); 4]);
}

#[test]
fn ramified_groups_scale_their_parts() {
    let t = parse_spectral_type("(((((((1)))))))_2").unwrap();
    let p = &t.points[0];
    assert_eq!((p.depth(), p.q, p.size()), (7, 2, 2));
    assert_eq!(pattern("(((((((1)))))))_2"), vec![Q::new(9.into(), 2.into())]);
    assert_eq!(levels("(1)_211")[0], vec![vec![2, 1, 1], vec![2, 1, 1]]);
    assert_eq!(levels("((1)(1))_2")[0], vec![vec![4], vec![2, 2], vec![2, 2]]);
    assert_eq!(levels("(1)_{3}"), levels("(1)_3"));
}

#[test]
fn pattern_counts_depth_per_point() {
    assert_eq!(pattern("(((1)))(((1))),11"), vec![q(4), q(1)]);
    assert!(same_pattern(&pattern("11,(1)(1)"), &parse_pattern_label("2+1").unwrap()));
    assert_eq!(format_pattern(&pattern("((1))_2(1)_2,1111")), "2+1");
}

#[test]
fn malformed_types_report_positions() {
    let pos = |s: &str| match parse_spectral_type(s) {
        Err(SpectralError::Parse { pos, .. }) => pos,
        other => panic!("{}: {:?}", s, other),
    };
    assert_eq!(pos(""), 0);
    assert_eq!(pos("11,"), 3);
    assert_eq!(pos("(11"), 3);
    assert_eq!(pos("()1"), 1);
    assert_eq!(pos("((1)_2)"), 4);
    assert_eq!(pos("1x"), 1);
    assert_eq!(pos("(1)_21(1)_31"), 0);
    assert_eq!(pos("10"), 1);
}

#[test]
fn sizes_and_refinements_are_checked() {
    assert_eq!(
        parse_spectral_type("(1)_2,21,111"),
        Err(SpectralError::SizeMismatch {
            point: 1,
            expected: 2,
            found: 3
        })
    );
    let bad = LocalType {
        levels: vec![vec![3, 1], vec![2, 2]],
        q: 1,
    };
    assert_eq!(
        SpectralType::from_levels(vec![bad]),
        Err(SpectralError::Refinement { point: 0, level: 0 })
    );
    let good = LocalType {
        levels: vec![vec![3, 1], vec![2, 1, 1]],
        q: 1,
    };
    assert!(SpectralType::from_levels(vec![good]).is_ok());
}

#[test]
fn catalog_has_every_system_once() {
    let c = catalog();
    assert_eq!(c.len(), 48);
    assert_eq!(c.iter().filter(|e| e.dimension == 2).count(), 8);
    assert_eq!(c[0].name, "H_VI");
    assert_eq!(c[47].name, "H_I^Mat");
    for e in &c {
        for f in e.fibrations() {
            assert!(e.expected.contains_key(&f), "{} {}", e.name, f);
        }
    }
    assert!(find(&c, "H_Suz^{3/2+2}").is_some());
    assert!(find(&c, "H_Foo").is_none());
}

#[test]
fn spectral_types_match_their_labels() {
    for e in catalog() {
        for t in &e.spectral_types {
            let Some(label) = &t.pattern else { continue };
            let want = parse_pattern_label(label).unwrap();
            assert!(
                same_pattern(&singularity_pattern(&t.parsed), &want),
                "{} {}: {}",
                e.name,
                t.string,
                format_pattern(&singularity_pattern(&t.parsed))
            );
        }
    }
}

#[test]
fn table_cells_agree_with_spectral_types() {
    let tables = parse_expected_tables(embedded::EXPECTED_TABLES).unwrap();
    let c = catalog();
    for r in tables.table5.iter().chain(&tables.table6) {
        let e = find(&c, &r.system).unwrap();
        let cell = normalize_label(&r.spectral_type);
        let cell = cell.trim_end_matches(',');
        if e.spectral_types.iter().any(|t| t.string == cell) {
            continue;
        }
        // one cell of the first table is misprinted with inconsistent sizes
        assert_eq!((r.system.as_str(), cell), ("H_FS^{A3}", "(1)_2,21,111"));
        assert!(matches!(parse_spectral_type(cell), Err(SpectralError::SizeMismatch { .. })));
    }
}

#[test]
fn tampered_tables_are_rejected() {
    let mut text = embedded::EXPECTED_TABLES.to_string();
    text = text.replacen("p.171", "p.172", 1);
    assert!(matches!(parse_expected_tables(&text), Err(CatalogError::DataIntegrity { .. })));
    assert!(parse_expected_tables(embedded::EXPECTED_TABLES).is_ok());
}

#[test]
fn data_directory_matches_embedded_copy() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let c = load_catalog_from(&dir).unwrap();
    let names: Vec<_> = c.iter().map(|e| e.name.clone()).collect();
    assert_eq!(names, catalog().iter().map(|e| e.name.clone()).collect::<Vec<_>>());
    assert!(matches!(load_catalog_from(Path::new("/nonexistent")), Err(CatalogError::Io(_))));
}

#[test]
fn printed_suzuki_g_does_not_commute() {
    let c = catalog();
    let e = find(&c, "H_Suz^{3/2+2}").unwrap();
    let space = e.space.as_ref().unwrap();
    let hs = e.conserved_quantities();
    assert!(poisson_bracket(&hs[1], &hs[0], space).is_zero());
    let zero: HashMap<Symbol, Q> = [(space.delta(), q(0))].into_iter().collect();
    let (_, printed) = &e.printed[0];
    let printed = printed.eval(&zero).unwrap();
    assert!(!poisson_bracket(&printed, &hs[0], space).is_zero());
}

#[test]
fn parameters_exclude_coordinates_and_gauge() {
    let c = catalog();
    let e = find(&c, "H_I^Mat").unwrap();
    let space = e.space.as_ref().unwrap();
    let names: Vec<&str> = space.parameters().iter().map(|s| s.name()).collect();
    assert_eq!(names, vec!["kappa2"]);
    assert_eq!(space.gauge()[0].0, Symbol::new("u"));
    assert!(e.lax.is_some() && e.spectral_curve.is_some());
}

#[test]
fn level_set_of_sixth_system_has_d4_fiber() {
    let c = catalog();
    let e = find(&c, "H_VI").unwrap();
    let r = classify_curve(&e.curves[&Fibration::H], e.expected.get(&Fibration::H), &mut Witness::default()).unwrap();
    assert_eq!(r.computed_label(), "I0*");
    assert_eq!(r.agreement(), Some(true));
}

#[test]
fn labels_lose_tex_markup() {
    assert_eq!(normalize_label("${\\rm I}_0^{*}$"), "I_0^*");
    assert_eq!(normalize_label("$D_4^{(1)}$"), "D_4^(1)");
    assert_eq!(normalize_label("${\\mathrm{II}}\\ $"), "II");
    assert_eq!(normalize_label("$H_{\\rm KFS}^{\\frac{4}{3}+\\frac{3}{2}}$"), "H_KFS^4/3+3/2");
    assert_eq!(normalize_label("$H_{{\\rm Gar},\\tilde{t_1}}^{9/2}$"), "H_Gar,~t_1^9/2");
    assert_eq!(normalize_label("$(2)^{2}\\times H_{1}$"), "(2)^2\u{d7}H_1");
    assert_eq!(normalize_label("\\frac{1"), "1/");
}

#[test]
fn lax_entries_reproduce_their_curves() {
    let c = catalog();
    let mut w = Witness::default();
    for name in ["H_I", "H_II", "H_I^Mat"] {
        let e = find(&c, name).unwrap();
        let r = check_entry(e, &mut w).unwrap();
        assert_eq!(r.spectral_curve_matches, Some(true), "{}", name);
        assert_eq!(r.lax_residual_zero, Some(true), "{}", name);
        assert_eq!(r.trace_powers_conserved, Some(true), "{}", name);
        assert_eq!(r.pass, Some(true), "{}", name);
    }
    let e = find(&c, "H_Gar^{1+1+1+1+1}").unwrap();
    assert_eq!(check_entry(e, &mut w).unwrap().pass, None);
}

#[test]
fn level_sets_exist_for_one_degree_of_freedom() {
    let c = catalog();
    assert!(c.iter().filter(|e| e.dimension == 2).all(|e| e.level_set().is_some()));
    assert!(c.iter().filter(|e| e.dimension == 4).all(|e| e.level_set().is_none()));
}
