use multibrot_cli::render::{escape_map, real_axis_span, render, RenderSpec};
use multibrot_core::dynamics::real_slice;
use multibrot_core::par::Exec;

#[test]
fn real_axis_matches_slice() {
    for d in [2, 3, 4] {
        let spec = RenderSpec::overview(d, 800, 800, 2000);
        let map = escape_map(&spec, Exec::Parallel);
        let (lo, hi) = real_axis_span(&spec, &map).unwrap();
        let (a, b) = real_slice(d).unwrap();
        let px = spec.pixel_size();
        assert!((lo - a.to_f64()).abs() <= px, "d={d} lo {lo} vs {}", a.to_f64());
        assert!((hi - b.to_f64()).abs() <= px, "d={d} hi {hi} vs {}", b.to_f64());
    }
}

#[test]
fn output_is_deterministic() {
    let spec = RenderSpec::overview(4, 200, 150, 300);
    let a = render(&spec, Exec::Parallel).to_ppm();
    let b = render(&spec, Exec::Parallel).to_ppm();
    assert_eq!(a, b);
}
