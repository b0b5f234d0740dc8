//! Oracles shared by the integration and acceptance tests. None of them
//! use the Garside machinery or the library's state evaluator.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use braidscope::conway::Ordering;
use braidscope::word::{BraidWord, Letter};

/// Free-group letter: generator index (1-based) and sign.
pub type FreeLetter = (usize, bool);

fn reduce_push(w: &mut Vec<FreeLetter>, x: FreeLetter) {
    if w.last() == Some(&(x.0, !x.1)) {
        w.pop();
    } else {
        w.push(x);
    }
}

fn invert(w: &[FreeLetter]) -> Vec<FreeLetter> {
    w.iter().rev().map(|&(i, s)| (i, !s)).collect()
}

/// Images of `x_1..x_n` under the Artin action of the braid. The action
/// is faithful, so two words are equal in `B_n` iff their images agree.
pub fn artin_images(word: &BraidWord) -> Vec<Vec<FreeLetter>> {
    let n = word.strands();
    let mut images: Vec<Vec<FreeLetter>> = (1..=n).map(|j| vec![(j, true)]).collect();
    for l in word.letters() {
        let i = l.index();
        // phi' = phi ∘ sigma_i^{±1}
        let subst = |w: &[FreeLetter], images: &[Vec<FreeLetter>]| {
            let mut out = Vec::new();
            for &(g, s) in w {
                let img = &images[g - 1];
                let piece = if s { img.clone() } else { invert(img) };
                for x in piece {
                    reduce_push(&mut out, x);
                }
            }
            out
        };
        let (a, b) = if l.is_positive() {
            (vec![(i, true), (i + 1, true), (i, false)], vec![(i, true)])
        } else {
            (vec![(i + 1, true)], vec![(i + 1, false), (i, true), (i + 1, true)])
        };
        let new_i = subst(&a, &images);
        let new_j = subst(&b, &images);
        images[i - 1] = new_i;
        images[i] = new_j;
    }
    images
}

pub fn artin_equal(u: &BraidWord, v: &BraidWord) -> bool {
    artin_images(u) == artin_images(v)
}

/// All words reachable by the given local rewrites, which map a window
/// starting at a position to its replacement.
fn closure<F>(start: &[Letter], rewrites: F) -> HashSet<Vec<Letter>>
where
    F: Fn(&[Letter], usize) -> Vec<(usize, Vec<Letter>)>,
{
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        for at in 0..w.len() {
            for (len, rep) in rewrites(&w, at) {
                let mut next = w[..at].to_vec();
                next.extend(rep);
                next.extend_from_slice(&w[at + len..]);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

fn far_swap(w: &[Letter], at: usize) -> Option<(usize, Vec<Letter>)> {
    let (x, y) = (*w.get(at)?, *w.get(at + 1)?);
    (x.index().abs_diff(y.index()) >= 2).then(|| (2, vec![y, x]))
}

/// Class of a word under far commutativity alone.
pub fn far_commutation_class(word: &BraidWord) -> HashSet<Vec<Letter>> {
    closure(word.letters(), |w, at| far_swap(w, at).into_iter().collect())
}

/// Class of a positive word under the positive braid relations. Two
/// positive words are equal in `B_n` iff their classes meet.
pub fn positive_class(word: &BraidWord) -> HashSet<Vec<Letter>> {
    assert!(word.is_positive());
    closure(word.letters(), |w, at| {
        let mut out: Vec<(usize, Vec<Letter>)> = far_swap(w, at).into_iter().collect();
        if at + 2 < w.len() {
            let (x, y, z) = (w[at], w[at + 1], w[at + 2]);
            if x == z && x.index().abs_diff(y.index()) == 1 {
                out.push((3, vec![y, x, y]));
            }
        }
        out
    })
}

/// Every word of length exactly `len` over the `2(n-1)` letters.
pub fn for_each_word(strands: usize, len: usize, mut f: impl FnMut(&BraidWord)) {
    let alphabet = Letter::alphabet(strands);
    let k = alphabet.len();
    let mut digits = vec![0usize; len];
    loop {
        let letters: Vec<Letter> = digits.iter().map(|&d| alphabet[d]).collect();
        f(&BraidWord::new(strands, letters).unwrap());
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Ports of one crossing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Port {
    InLeft,
    InRight,
}

/// Where an arc ends going down: a crossing input or a bottom endpoint.
#[derive(Clone, Copy, Debug)]
enum Head {
    Crossing(usize, Port),
    Bottom(usize),
}

/// Braid diagram as a port graph, evaluated state by state in Gray-code
/// order.
pub struct PortGraph {
    strands: usize,
    signs: Vec<bool>,
    /// Arc leaving top endpoint `p`.
    from_top: Vec<Head>,
    /// Arcs leaving the left and right outputs of each crossing.
    from_out: Vec<[Head; 2]>,
}

impl PortGraph {
    pub fn new(word: &BraidWord) -> Self {
        let n = word.strands();
        let c = word.len();
        // tail of the open arc at each position: None = top endpoint
        let mut tail: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut from_top = vec![Head::Bottom(0); n];
        let mut from_out = vec![[Head::Bottom(0); 2]; c];
        let attach = |tail: Option<(usize, usize)>, p: usize, head: Head, from_top: &mut Vec<Head>, from_out: &mut Vec<[Head; 2]>| {
            match tail {
                None => from_top[p] = head,
                Some((t, side)) => from_out[t][side] = head,
            }
        };
        for (t, l) in word.letters().iter().enumerate() {
            let (a, b) = (l.index() - 1, l.index());
            attach(tail[a], a, Head::Crossing(t, Port::InLeft), &mut from_top, &mut from_out);
            attach(tail[b], b, Head::Crossing(t, Port::InRight), &mut from_top, &mut from_out);
            tail[a] = Some((t, 0));
            tail[b] = Some((t, 1));
        }
        for (p, &t) in tail.iter().enumerate() {
            attach(t, p, Head::Bottom(p), &mut from_top, &mut from_out);
        }
        PortGraph { strands: n, signs: word.letters().iter().map(|l| l.is_positive()).collect(), from_top, from_out }
    }

    /// `Some(sign)` when the state is coherent and descending.
    fn evaluate(&self, smoothed: &[bool], top_rank: &[usize], bottom_rank: &[usize]) -> Option<i64> {
        let c = self.signs.len();
        let mut passes = vec![0u8; c];
        let mut sign = 1i64;
        let mut inputs: Vec<usize> = (0..self.strands).collect();
        inputs.sort_by_key(|&p| top_rank[p]);
        for &p in &inputs {
            let mut head = self.from_top[p];
            loop {
                match head {
                    Head::Bottom(q) => {
                        if bottom_rank[q] != top_rank[p] + 1 {
                            return None;
                        }
                        break;
                    }
                    Head::Crossing(t, port) => {
                        passes[t] += 1;
                        let out_side = if smoothed[t] {
                            if passes[t] == 1 {
                                let over = if self.signs[t] { Port::InRight } else { Port::InLeft };
                                if port != over {
                                    return None;
                                }
                                if !self.signs[t] {
                                    sign = -sign;
                                }
                            }
                            if port == Port::InLeft { 0 } else { 1 }
                        } else if port == Port::InLeft {
                            1
                        } else {
                            0
                        };
                        head = self.from_out[t][out_side];
                    }
                }
            }
        }
        // a crossing never reached would sit on a closed component
        passes.iter().all(|&k| k == 2).then_some(sign)
    }

    /// Coefficients `a_0..a_c` (untrimmed).
    pub fn conway(&self, ordering: &Ordering) -> Vec<i64> {
        let (top_rank, bottom_rank) = ranks(ordering);
        let c = self.signs.len();
        let mut coefficients = vec![0i64; c + 1];
        let mut smoothed = vec![false; c];
        let mut size = 0;
        for step in 0u64..(1u64 << c) {
            if step > 0 {
                let flip = step.trailing_zeros() as usize;
                smoothed[flip] = !smoothed[flip];
                size = if smoothed[flip] { size + 1 } else { size - 1 };
            }
            if let Some(s) = self.evaluate(&smoothed, &top_rank, &bottom_rank) {
                coefficients[size] += s;
            }
        }
        coefficients
    }
}

fn ranks(ordering: &Ordering) -> (Vec<usize>, Vec<usize>) {
    let mut all: Vec<u32> = ordering.top().iter().chain(ordering.bottom()).copied().collect();
    all.sort_unstable();
    let rank = |l: &u32| all.iter().position(|x| x == l).unwrap() + 1;
    (ordering.top().iter().map(rank).collect(), ordering.bottom().iter().map(rank).collect())
}

/// Trims trailing zeros.
pub fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Every valid ordering up to relabelling: odd ranks on top, even below.
pub fn all_orderings(strands: usize) -> Vec<Ordering> {
    let odd: Vec<u32> = (0..strands as u32).map(|k| 2 * k + 1).collect();
    let even: Vec<u32> = (0..strands as u32).map(|k| 2 * k + 2).collect();
    let mut out = Vec::new();
    for top in permutations(&odd) {
        for bottom in permutations(&even) {
            out.push(Ordering::new(top.clone(), bottom).unwrap());
        }
    }
    out
}

/// The ordering traverses whole vertical lines, and for each used column
/// the line on the over side of its crossings comes first.
pub fn is_homogeneous_ordering(word: &BraidWord, ordering: &Ordering) -> bool {
    let (top, bottom) = ranks(ordering);
    if (0..word.strands()).any(|p| bottom[p] != top[p] + 1) {
        return false;
    }
    word.letters().iter().all(|l| {
        let (left, right) = (top[l.index() - 1], top[l.index()]);
        if l.is_positive() { right < left } else { left < right }
    })
}
