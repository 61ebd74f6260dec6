use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thrallkit::cache::IdempotentCache;
use thrallkit::json;
use thrallkit::AppError;
use thrallkit_core::free_lie::{exp_truncated, LieElement};
use thrallkit_core::group_algebra::higher_lie_idempotents;
use thrallkit_core::shuffle::PiecewiseLinearPath;

#[test]
fn tensors_and_series_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let l = LieElement::random(3, 3, &mut rng);
    let s = exp_truncated(&l.to_series()).unwrap();
    let back = json::parse_series(&json::series(&s)).unwrap();
    assert_eq!(back, s);
    let t = s.level(3).clone();
    assert_eq!(json::parse_tensor(&json::tensor(&t)).unwrap(), t);
}

#[test]
fn group_algebra_round_trip() {
    for e in higher_lie_idempotents(4).unwrap().values() {
        assert_eq!(&json::parse_group_algebra(&json::group_algebra(e)).unwrap(), e);
    }
}

#[test]
fn paths_accept_integers_and_rationals() {
    let v = json::parse_document(r#"{"points": [[0, "1/2"], ["-3/4", 2]]}"#).unwrap();
    let p = json::parse_path(&v).unwrap();
    let expected = PiecewiseLinearPath::new(vec![
        vec![thrallkit_core::scalar::int(0), thrallkit_core::scalar::ratio(1, 2)],
        vec![thrallkit_core::scalar::ratio(-3, 4), thrallkit_core::scalar::int(2)],
    ])
    .unwrap();
    assert_eq!(p.points(), expected.points());
}

#[test]
fn errors_name_fields() {
    let field = |text: &str| match json::parse_series(&json::parse_document(text).unwrap()) {
        Err(AppError::Input { field, .. }) => field,
        other => panic!("expected an input error, got {:?}", other.map(|_| ())),
    };
    assert_eq!(field(r#"{"dim": 2, "levels": [{"": "1"}, {"1": "x"}]}"#), "levels[1].\"1\"");
    assert_eq!(field(r#"{"dim": 2, "levels": [{"": "1"}, {"12": "1"}]}"#), "levels[1].\"12\"");
    assert_eq!(field(r#"{"levels": []}"#), "dim");
    assert_eq!(field(r#"{"dim": 2, "k_max": 3, "levels": [{"": "1"}]}"#), "levels");
}

#[test]
fn cache_recovers_from_corrupt_files() {
    let dir = tempfile::tempdir().unwrap();
    let cache = IdempotentCache::in_dir(dir.path());
    let fresh = cache.idempotents(3).unwrap();
    let file = dir.path().join("idempotent-k3-3.json");
    std::fs::write(&file, "not json").unwrap();
    assert_eq!(cache.idempotents(3).unwrap(), fresh);
    assert_eq!(json::parse_group_algebra(&json::parse_document(&std::fs::read_to_string(&file).unwrap()).unwrap()).unwrap(), fresh[&"3".parse().unwrap()]);
    assert_eq!(IdempotentCache::disabled().idempotent(&"2,1".parse().unwrap()).unwrap(), fresh[&"2,1".parse().unwrap()]);
}
