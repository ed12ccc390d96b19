use comfy_table::presets::ASCII_BORDERS_ONLY_CONDENSED;
use comfy_table::Table;

pub fn render(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut table = Table::new();
    table.load_style(ASCII_BORDERS_ONLY_CONDENSED);
    table.set_header(header.to_vec());
    for row in rows {
        table.add_row(row);
    }
    format!("{table}\n")
}

pub fn grading((a, m): (i64, i64)) -> String {
    format!("({a}, {m})")
}

/// A tower as a `U^b` block; the free tower is `U^inf`.
pub fn tower(order: Option<i64>) -> String {
    match order {
        Some(h) => format!("U^{h}"),
        None => "U^inf".to_string(),
    }
}

pub fn list(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}
