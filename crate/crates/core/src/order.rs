use std::cmp::Ordering;

/// Ordering used for feature values and class labels: numerically when both
/// sides parse as numbers, otherwise bytewise.
///
/// `"2" < "10"`, and bin indices sort in bin order.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<f64>(), b.parse::<f64>()) {
        (Ok(x), Ok(y)) if x.is_finite() && y.is_finite() => x.total_cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        _ => a.cmp(b),
    }
}

/// Sorts and deduplicates in natural order.
pub fn sorted_distinct<'a, I>(values: I) -> Vec<String>
where
    I: IntoIterator<Item = &'a str>,
{
    let mut out: Vec<String> = values.into_iter().map(str::to_owned).collect();
    out.sort_by(|a, b| natural_cmp(a, b));
    out.dedup();
    out
}
