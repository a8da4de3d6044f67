use process_algebra_wasm::{boost_event, overlap_matrix, potential_profile};

#[test]
fn boost_scales_light_cone_coordinates() {
    let r = boost_event(0.6, 2.0, 0.5).unwrap();
    let k = r[4];
    assert!((k - 2.0).abs() < 1e-12);
    assert!((r[2] - 2.5 / k).abs() < 1e-12);
    assert!((r[3] - 1.5 * k).abs() < 1e-12);
    assert!(boost_event(1.0, 0.0, 0.0).is_err());
}

#[test]
fn profile_has_three_columns() {
    let p = potential_profile(1.0, 1.0, 101).unwrap();
    assert_eq!(p.len() % 3, 0);
    for row in p.chunks(3) {
        assert!((row[1] - row[2]).abs() < 1e-2);
    }
    assert!(potential_profile(-1.0, 1.0, 101).is_err());
}

#[test]
fn overlaps_are_uniform() {
    let o = overlap_matrix(5).unwrap();
    assert_eq!(o.len(), 25);
    assert!(o.iter().all(|v| (v - 0.2).abs() < 1e-12));
    assert!(overlap_matrix(1).is_err());
}
