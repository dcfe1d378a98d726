/// Formats `x` with exactly `precision` decimals, rounding half away from
/// zero on the shortest decimal representation of `x` (so `0.145` becomes
/// `0.15`, even though the nearest double is slightly below it).
pub fn format_fixed(x: f64, precision: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let repr = format!("{}", x.abs());
    let (int_part, frac_part) = repr.split_once('.').unwrap_or((&repr, ""));
    let mut digits: Vec<u8> = int_part.bytes().map(|b| b - b'0').collect();
    let int_len = digits.len();
    let frac: Vec<u8> = frac_part.bytes().map(|b| b - b'0').collect();
    digits.extend(frac.iter().take(precision));
    digits.resize(int_len + precision, 0);
    if frac.get(precision).is_some_and(|&d| d >= 5) {
        let mut k = digits.len();
        loop {
            if k == 0 {
                digits.insert(0, 1);
                break;
            }
            k -= 1;
            if digits[k] == 9 {
                digits[k] = 0;
            } else {
                digits[k] += 1;
                break;
            }
        }
    }
    let split = digits.len() - precision;
    let to_str = |ds: &[u8]| ds.iter().map(|d| char::from(b'0' + d)).collect::<String>();
    let mut out = String::new();
    if x < 0.0 && digits.iter().any(|&d| d != 0) {
        out.push('-');
    }
    out.push_str(&to_str(&digits[..split]));
    if precision > 0 {
        out.push('.');
        out.push_str(&to_str(&digits[split..]));
    }
    out
}

/// Shortest round-trip representation, always with a decimal point.
pub fn format_exact(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| x.to_string())
}
