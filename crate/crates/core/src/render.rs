//! ASCII braid diagrams, read top to bottom. Each letter takes three rows;
//! the middle character shows which strand passes over: `/` when the
//! strand coming from the right is on top (positive), `\` otherwise.
//!
//! ```text
//! 1   2   3
//! |   |   |
//!  \ /    |
//!   /     |
//!  / \    |
//! |   |   |
//! ```

use crate::word::BraidWord;

const GAP: usize = 4;

fn strand_row(strands: usize) -> Vec<u8> {
    let mut row = vec![b' '; GAP * (strands - 1) + 1];
    for p in 0..strands {
        row[GAP * p] = b'|';
    }
    row
}

fn push_row(out: &mut String, row: &[u8]) {
    out.push_str(String::from_utf8_lossy(row).trim_end());
    out.push('\n');
}

/// Renders the word with a header of strand positions.
pub fn render_ascii(word: &BraidWord) -> String {
    let n = word.strands();
    let mut out = String::new();
    let mut header = String::new();
    for p in 1..=n {
        while header.len() < GAP * (p - 1) {
            header.push(' ');
        }
        header.push_str(&format!("{p} "));
    }
    out.push_str(header.trim_end());
    out.push('\n');
    push_row(&mut out, &strand_row(n));
    for l in word.letters() {
        let x = GAP * (l.index() - 1);
        let mut rows = [strand_row(n), strand_row(n), strand_row(n)];
        for row in rows.iter_mut() {
            row[x] = b' ';
            row[x + GAP] = b' ';
        }
        rows[0][x + 1] = b'\\';
        rows[0][x + 3] = b'/';
        rows[1][x + 2] = if l.is_positive() { b'/' } else { b'\\' };
        rows[2][x + 1] = b'/';
        rows[2][x + 3] = b'\\';
        for row in &rows {
            push_row(&mut out, row);
        }
    }
    push_row(&mut out, &strand_row(n));
    out
}
