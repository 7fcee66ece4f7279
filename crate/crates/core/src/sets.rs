//! Intersection primitives over sorted u32 slices.

/// Calls `f` for every value present in both sorted slices.
///
/// Switches from a linear merge to binary probing when the lengths are badly
/// skewed; the probed side shrinks after every hit, so the cost is bounded by
/// `|short| * log |long|`.
pub(crate) fn for_each_common(a: &[u32], b: &[u32], mut f: impl FnMut(u32)) {
    let (short, mut long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if short.is_empty() {
        return;
    }
    if long.len() / short.len() >= 16 {
        for &x in short {
            match long.binary_search(&x) {
                Ok(p) => {
                    f(x);
                    long = &long[p + 1..];
                }
                Err(p) => long = &long[p..],
            }
            if long.is_empty() {
                return;
            }
        }
    } else {
        let (mut i, mut j) = (0, 0);
        while i < short.len() && j < long.len() {
            match short[i].cmp(&long[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    f(short[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

pub(crate) fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for_each_common(a, b, |x| out.push(x));
    out
}

/// Intersection of any number of sorted slices, smallest first.
pub(crate) fn intersect_all(lists: &[&[u32]]) -> Vec<u32> {
    match lists.len() {
        0 => Vec::new(),
        1 => lists[0].to_vec(),
        _ => {
            let mut order: Vec<&[u32]> = lists.to_vec();
            order.sort_by_key(|l| l.len());
            let mut acc = intersect(order[0], order[1]);
            for rest in &order[2..] {
                if acc.is_empty() {
                    break;
                }
                acc.retain(|x| rest.binary_search(x).is_ok());
            }
            acc
        }
    }
}
