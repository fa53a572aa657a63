use hms_core::stability::*;
use hms_core::DegreeTable;

fn quintic() -> StabilityLab {
    StabilityLab::new(5).unwrap()
}

#[test]
fn gepner_order_is_clockwise() {
    let lab = quintic();
    let c = lab.gepner_collection(0, 4).unwrap();
    assert!(lab.is_ordered(&c));
    let labels: Vec<String> = c.entries.iter().map(ToString::to_string).collect();
    assert_eq!(labels, ["O", "tau~^-1 O", "tau~^-2 O", "tau~^-3 O", "tau~^-4 O"]);
    for w in c.entries.windows(2) {
        assert_eq!(&w[0].phase - &w[1].phase, hms_core::exact::Q::new(1.into(), 5.into()));
    }
    assert_eq!(lab.gepner_object(5).shift, -2);
}

#[test]
fn large_radius_order() {
    let lab = quintic();
    let c = lab.large_radius_collection(0, 1).unwrap();
    assert_eq!(c.entries.iter().map(ToString::to_string).collect::<Vec<_>>(), ["O(1)", "O"]);
    assert_eq!(lab.large_radius_collection(3, 3).unwrap().entries.len(), 1);
    assert!(lab.large_radius_collection(2, 1).is_err());
    assert!(StabilityLab::new(2).unwrap().large_radius_collection(0, 1).is_err());
    let moved = lab.monodromy(&c, Kind::LargeRadius).unwrap();
    assert!(lab.is_ordered(&moved));
    assert_eq!(moved.entries[0].label, Label::LineBundle(2));
}

#[test]
fn kronecker_pair() {
    let lab = quintic();
    let c = lab.gepner_collection(0, 1).unwrap();
    let q = lab.heart_quiver(&c, 0, 2).unwrap();
    assert_eq!(q.arrows_between(0, 1), DegreeTable::from_pairs([(1, 5)]));
    assert_eq!(q.arrows_between(1, 0), DegreeTable::from_pairs([(2, 5)]));
    assert_eq!(q.arrows_between(0, 0), DegreeTable::from_pairs([(3, 1)]));
    assert_eq!(q.arrows_between(1, 1), DegreeTable::from_pairs([(3, 1)]));
}

#[test]
fn mutated_pair_matches_large_radius_pair() {
    let lab = quintic();
    let c = lab.gepner_collection(0, 1).unwrap();
    let m = lab.mutate(&c, 0).unwrap();
    assert_eq!(m.entries[0].to_string(), "tau~^-1 O[1]");
    assert!(lab.is_ordered(&m));
    let q = lab.heart_quiver(&m, 0, 2).unwrap();
    assert_eq!(q.arrows_between(1, 0), DegreeTable::from_pairs([(0, 5)]));
    assert_eq!(q.arrows_between(0, 1), DegreeTable::from_pairs([(3, 5)]));
    let lr = lab.large_radius_collection(0, 1).unwrap();
    assert_eq!(q.shape(), lab.heart_quiver(&lr, 0, 2).unwrap().shape());
    assert_eq!(lab.mutate_dual(&m, 0).unwrap(), c);
}

#[test]
fn mutation_rejected_without_extension() {
    let lab = quintic();
    let c = lab.gepner_collection(0, 1).unwrap();
    let m = lab.mutate(&c, 0).unwrap();
    assert!(lab.mutate(&m, 0).is_err());
    assert!(lab.mutate(&c, 1).is_err());
}

#[test]
fn triple_glues_two_kronecker_quivers() {
    let lab = quintic();
    let c = lab.gepner_collection(0, 2).unwrap();
    let q = lab.heart_quiver(&c, 0, 3).unwrap();
    assert_eq!(q.arrows_between(0, 1), DegreeTable::from_pairs([(1, 5)]));
    assert_eq!(q.arrows_between(1, 2), DegreeTable::from_pairs([(1, 5)]));
    assert_eq!(q.arrows_between(0, 2), DegreeTable::from_pairs([(2, 10)]));
    assert_eq!(q.arrows_between(2, 0), DegreeTable::from_pairs([(1, 10)]));
    for v in 0..3 {
        assert_eq!(q.arrows_between(v, v), DegreeTable::from_pairs([(3, 1)]));
    }
    assert!(lab.heart_quiver(&c, 1, 3).is_err());
    assert!(lab.heart_quiver(&c, 0, 0).is_err());
}

#[test]
fn cluster_collections() {
    let lab = quintic();
    let c = lab.gepner_collection(0, 2).unwrap();
    assert!(lab.is_cluster_collection(&c.entries).unwrap().holds);
    let m = lab.mutate(&lab.gepner_collection(0, 1).unwrap(), 0).unwrap();
    let check = lab.is_cluster_collection(&m.entries).unwrap();
    assert!(!check.holds);
    assert!(check.witness.is_some());
    assert!(lab.is_cluster_collection(&c.entries[..1]).unwrap().holds);
}

#[test]
fn gepner_monodromy_period() {
    let lab = quintic();
    let c = lab.gepner_collection(0, 4).unwrap();
    let mut m = c.clone();
    for step in 1..=5 {
        let next = lab.monodromy(&m, Kind::Gepner).unwrap();
        for (a, b) in m.entries.iter().zip(&next.entries) {
            assert_eq!(&b.phase - &a.phase, hms_core::exact::Q::new(1.into(), 5.into()));
        }
        assert!(lab.is_ordered(&next), "step {step}");
        m = next;
    }
    for (a, b) in c.entries.iter().zip(&m.entries) {
        assert_eq!(a.label, b.label);
        assert_eq!(b.shift - a.shift, 2);
    }
    assert!(lab.monodromy(&c, Kind::LargeRadius).is_err());
}

#[test]
fn quivers_invariant_under_monodromy() {
    let lab = quintic();
    let c = lab.gepner_collection(0, 2).unwrap();
    let moved = lab.monodromy(&lab.monodromy(&c, Kind::Gepner).unwrap(), Kind::Gepner).unwrap();
    assert_eq!(lab.heart_quiver(&c, 0, 3).unwrap().arrows, lab.heart_quiver(&moved, 0, 3).unwrap().arrows);
    let lr = lab.large_radius_collection(0, 1).unwrap();
    let lr_moved = lab.monodromy(&lr, Kind::LargeRadius).unwrap();
    assert_eq!(lab.heart_quiver(&lr, 0, 2).unwrap().arrows, lab.heart_quiver(&lr_moved, 0, 2).unwrap().arrows);
}

#[test]
fn forward_count_is_euler_pairing() {
    for n in 3..=5 {
        let lab = StabilityLab::new(n).unwrap();
        let c = lab.gepner_collection(0, 1).unwrap();
        let q = lab.heart_quiver(&c, 0, 2).unwrap();
        let table = hms_core::orbit::orbit_hom_table(n).unwrap();
        let chi = hms_core::orbit::euler_pairing(&table, 0, 1).raw;
        assert_eq!(q.arrows_between(0, 1).total() as i64, chi.abs(), "n={n}");
    }
}

#[test]
fn mixed_kinds_unavailable() {
    let lab = quintic();
    let a = lab.gepner_object(0);
    let b = lab.line_bundle(0);
    assert!(lab.hom(&a, &b).is_err());
}
