/// `x` with 15 significant digits: positional notation for magnitudes in
/// `[1e-5, 1e15)`, scientific otherwise.
pub fn sig15(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return "0.00000000000000".into();
    }
    // Take the exponent after rounding so 9.99...95 becomes 1.0e1.
    let sci = format!("{x:.14e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("exponent in scientific formatting");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}
