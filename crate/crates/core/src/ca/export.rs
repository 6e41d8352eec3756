//! Spacetime diagram export.

/// One row per line, `.` for 0 and `#` for 1, each line newline-terminated.
pub fn to_text(diagram: &[Vec<bool>]) -> String {
    let width = diagram.first().map_or(0, Vec::len);
    let mut out = String::with_capacity(diagram.len() * (width + 1));
    for row in diagram {
        out.extend(row.iter().map(|&b| if b { '#' } else { '.' }));
        out.push('\n');
    }
    out
}

/// Binary PBM (P4). Live cells are black; rows are packed MSB-first and
/// padded to a whole byte.
pub fn to_pbm(diagram: &[Vec<bool>]) -> Vec<u8> {
    let width = diagram.first().map_or(0, Vec::len);
    let mut out = format!("P4\n{width} {}\n", diagram.len()).into_bytes();
    for row in diagram {
        for chunk in row.chunks(8) {
            let byte = chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (7 - i)));
            out.push(byte);
        }
    }
    out
}
