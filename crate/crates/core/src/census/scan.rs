//! Bounded scans of open statements about geodesics. Each scan walks
//! lengths `1..=L` in order and can checkpoint after every length, so an
//! interrupted run resumes where it stopped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::growth::{for_each_class_word, WordClass};
use super::CensusError;
use crate::garside::CanonicalForm;
use crate::geodesy::BallTable;
use crate::word::{BraidWord, Letter, PatternEntry, SignPattern};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanId {
    /// If `ws` is geodesic then `wss` is geodesic.
    Smbc1,
    /// If `usv` is geodesic then `ussv` is geodesic.
    Smbc2,
    /// If `ws` has minimal conjugacy length then so does `wss`.
    Smbc3,
    /// Homogeneous words of one pattern are equal iff related by the
    /// braid relations that pattern allows plus far commutativity.
    Hbgr,
    /// Equal homogeneous words have the same letter count per block.
    Blocks,
    /// Every inverse-free letter set is the R-set of some braid.
    RsetWitness,
    /// There are no dead-end elements.
    DeadEnd,
}

impl ScanId {
    pub const ALL: [ScanId; 7] = [
        ScanId::Smbc1,
        ScanId::Smbc2,
        ScanId::Smbc3,
        ScanId::Hbgr,
        ScanId::Blocks,
        ScanId::RsetWitness,
        ScanId::DeadEnd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanId::Smbc1 => "smbc1",
            ScanId::Smbc2 => "smbc2",
            ScanId::Smbc3 => "smbc3",
            ScanId::Hbgr => "hbgr",
            ScanId::Blocks => "blocks",
            ScanId::RsetWitness => "rset-witness",
            ScanId::DeadEnd => "dead-end",
        }
    }

    fn needs_ball(self) -> bool {
        !matches!(self, ScanId::Hbgr | ScanId::Blocks)
    }
}

impl fmt::Display for ScanId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanId {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScanId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| CensusError::UnknownScan(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    NoCounterexampleFound,
    Counterexample,
    ProvedInRange,
}

/// Words that can be fed back to the library to replay a finding.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub strands: usize,
    pub words: Vec<String>,
    pub note: String,
}

impl Witness {
    fn new(strands: usize, words: &[&BraidWord], note: impl Into<String>) -> Self {
        Witness { strands, words: words.iter().map(|w| w.render()).collect(), note: note.into() }
    }

    /// Parses the witness words back.
    pub fn words(&self) -> Result<Vec<BraidWord>, crate::word::WordError> {
        self.words.iter().map(|w| BraidWord::parse(w, self.strands)).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture: ScanId,
    pub strands: usize,
    pub max_length: usize,
    pub ball_radius: Option<usize>,
    pub conj_bound: Option<usize>,
    pub status: ScanStatus,
    pub counterexamples: Vec<Witness>,
    pub examples: Vec<Witness>,
    pub notes: Vec<String>,
    pub checked: u64,
    pub completed_length: usize,
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Restricts `hbgr` to one full sign pattern.
    pub pattern: Option<SignPattern>,
    /// Longest conjugator tried by `smbc3`.
    pub conj_bound: usize,
    /// Report file rewritten after every completed length.
    pub checkpoint: Option<PathBuf>,
    /// Witnesses kept per list.
    pub witness_limit: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { pattern: None, conj_bound: 2, checkpoint: None, witness_limit: 20 }
    }
}

struct Scanner<'a> {
    n: usize,
    ball: Option<&'a BallTable>,
    opts: &'a ScanOptions,
    report: ConjectureReport,
    /// `rset-witness`: first braid found for each letter set.
    rsets: BTreeMap<String, String>,
}

impl<'a> Scanner<'a> {
    fn ball(&self) -> &'a BallTable {
        self.ball.expect("checked before scanning")
    }

    fn counterexample(&mut self, words: &[&BraidWord], note: impl Into<String>) {
        if self.report.counterexamples.len() < self.opts.witness_limit {
            self.report.counterexamples.push(Witness::new(self.n, words, note));
        }
    }

    fn example(&mut self, words: &[&BraidWord], note: impl Into<String>) {
        if self.report.examples.len() < self.opts.witness_limit {
            self.report.examples.push(Witness::new(self.n, words, note));
        }
    }

    fn word(&self, letters: &[Letter]) -> BraidWord {
        BraidWord::new(self.n, letters.to_vec()).expect("valid letters")
    }

    /// Geodesic words of length exactly `m` with their braids.
    fn geodesics(&self, m: usize) -> Result<Vec<(Vec<Letter>, CanonicalForm)>, CensusError> {
        let mut out = Vec::new();
        self.ball().for_each_geodesic(m, |w, f| {
            if w.len() == m {
                out.push((w.to_vec(), f.clone()));
            }
        })?;
        Ok(out)
    }

    fn scan_length(&mut self, id: ScanId, m: usize) -> Result<(), CensusError> {
        match id {
            ScanId::Smbc1 => self.smbc1(m),
            ScanId::Smbc2 => self.smbc2(m),
            ScanId::Smbc3 => self.smbc3(m),
            ScanId::Hbgr => self.hbgr(m),
            ScanId::Blocks => self.blocks(m),
            ScanId::RsetWitness => self.rset_witness(m),
            ScanId::DeadEnd => self.dead_end(m),
        }
    }

    // `ws` of length m - 1, `wss` of length m
    fn smbc1(&mut self, m: usize) -> Result<(), CensusError> {
        if m < 2 {
            return Ok(());
        }
        for (w, form) in self.geodesics(m - 1)? {
            let s = *w.last().expect("nonempty");
            self.report.checked += 1;
            if self.ball().length_of(&form.mul_letter(s)) != Some(m as u32) {
                let ws = self.word(&w);
                let mut wss = ws.clone();
                wss.push(s);
                self.counterexample(&[&ws, &wss], "ws geodesic, wss not geodesic");
            }
        }
        Ok(())
    }

    fn smbc2(&mut self, m: usize) -> Result<(), CensusError> {
        if m < 2 {
            return Ok(());
        }
        for (w, _) in self.geodesics(m - 1)? {
            for j in 0..w.len() {
                let mut longer = w.clone();
                longer.insert(j, w[j]);
                let word = self.word(&longer);
                self.report.checked += 1;
                if !self.ball().is_geodesic(&word)? {
                    let usv = self.word(&w);
                    self.counterexample(&[&usv, &word], format!("doubling letter {} breaks geodesy", j + 1));
                }
            }
        }
        Ok(())
    }

    fn smbc3(&mut self, m: usize) -> Result<(), CensusError> {
        if m < 2 {
            return Ok(());
        }
        let bound = self.opts.conj_bound.min(self.ball().radius());
        for (w, _) in self.geodesics(m - 1)? {
            let ws = self.word(&w);
            let own = self.ball().min_conj_length_bounded(&ws, bound)?;
            if own.value as usize != ws.len() {
                continue;
            }
            self.report.checked += 1;
            let mut wss = ws.clone();
            wss.push(*w.last().expect("nonempty"));
            let geodesic = self.ball().is_geodesic(&wss)?;
            let shorter = self.ball().min_conj_length_bounded(&wss, bound)?.value < m as u32;
            if geodesic && !shorter {
                continue;
            }
            let what = if geodesic { "wss has a shorter conjugate" } else { "wss not geodesic" };
            if own.exact {
                self.counterexample(&[&ws, &wss], what);
            } else {
                let note = format!("{what}; ws minimal only up to conjugators of length {bound}");
                self.example(&[&ws, &wss], note);
            }
        }
        Ok(())
    }

    fn patterns(&self) -> Vec<Vec<i8>> {
        let g = self.n - 1;
        match &self.opts.pattern {
            Some(p) => vec![p.resolved(1)],
            None => (0u32..1 << g)
                .map(|mask| (0..g).map(|k| if mask >> k & 1 == 0 { 1 } else { -1 }).collect())
                .collect(),
        }
    }

    fn hbgr(&mut self, m: usize) -> Result<(), CensusError> {
        let g = self.n - 1;
        for signs in self.patterns() {
            let total = g.pow(m as u32);
            let decode = |mut code: usize| -> Vec<usize> {
                let mut out = vec![0; m];
                for slot in out.iter_mut() {
                    *slot = code % g + 1;
                    code /= g;
                }
                out
            };
            let encode = |idx: &[usize]| -> usize { idx.iter().rev().fold(0, |acc, &i| acc * g + i - 1) };
            let mut parent: Vec<usize> = (0..total).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            for code in 0..total {
                let idx = decode(code);
                for t in 0..m.saturating_sub(1) {
                    let (a, b) = (idx[t], idx[t + 1]);
                    let mut moves = Vec::new();
                    if a.abs_diff(b) >= 2 {
                        let mut r = idx.clone();
                        r.swap(t, t + 1);
                        moves.push(r);
                    }
                    if t + 2 < m && idx[t + 2] == a && a.abs_diff(b) == 1 && signs[a - 1] == signs[b - 1] {
                        let mut r = idx.clone();
                        r[t] = b;
                        r[t + 1] = a;
                        r[t + 2] = b;
                        moves.push(r);
                    }
                    for r in moves {
                        let (x, y) = (find(&mut parent, code), find(&mut parent, encode(&r)));
                        parent[x] = y;
                    }
                }
            }
            let n = self.n;
            let to_word = |idx: &[usize]| {
                let letters = idx.iter().map(|&i| Letter::new(i, signs[i - 1] > 0)).collect();
                BraidWord::new(n, letters).expect("valid letters")
            };
            let mut first: HashMap<CanonicalForm, (usize, usize)> = HashMap::new();
            let mut failures = Vec::new();
            for code in 0..total {
                let word = to_word(&decode(code));
                let form = CanonicalForm::from_word(&word).map_err(crate::geodesy::GeodesyError::from)?;
                let root = find(&mut parent, code);
                self.report.checked += 1;
                match first.get(&form) {
                    None => {
                        first.insert(form, (code, root));
                    }
                    Some(&(other, other_root)) if other_root != root => failures.push((other, code)),
                    Some(_) => {}
                }
            }
            for (a, b) in failures {
                let (wa, wb) = (to_word(&decode(a)), to_word(&decode(b)));
                let note = format!("equal but not related by allowed rewrites, pattern {:?}", signs);
                self.counterexample(&[&wa, &wb], note);
            }
        }
        Ok(())
    }

    fn blocks(&mut self, m: usize) -> Result<(), CensusError> {
        let mut groups: HashMap<CanonicalForm, Vec<BraidWord>> = HashMap::new();
        let n = self.n;
        let mut words = Vec::new();
        for_each_class_word(n, m, WordClass::Homogeneous, |w| {
            if w.len() == m {
                words.push(BraidWord::new(n, w.to_vec()).expect("valid letters"));
            }
        });
        for word in words {
            let form = CanonicalForm::from_word(&word).map_err(crate::geodesy::GeodesyError::from)?;
            groups.entry(form).or_default().push(word);
        }
        let mut forms: Vec<&CanonicalForm> = groups.keys().collect();
        forms.sort();
        let mut findings = Vec::new();
        for form in forms {
            let group = &groups[form];
            let mut merged = Some(SignPattern::from_signs(&vec![0; n - 1]));
            for w in group {
                merged = merged.and_then(|p| p.merge(&w.sign_pattern().expect("homogeneous")));
            }
            let Some(pattern) = merged else {
                findings.push((group[0].clone(), group[1..].to_vec(), "sign patterns conflict"));
                continue;
            };
            let profile = |w: &BraidWord| w.block_profile(&pattern).expect("pattern admits word");
            let reference = profile(&group[0]);
            for w in &group[1..] {
                self.report.checked += 1;
                if profile(w) != reference {
                    findings.push((group[0].clone(), vec![w.clone()], "block counts differ"));
                }
            }
        }
        for (a, others, note) in findings {
            let mut refs = vec![&a];
            refs.extend(others.iter());
            self.counterexample(&refs, note);
        }
        Ok(())
    }

    fn rset_key(letters: &[Letter]) -> String {
        letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    }

    fn rset_witness(&mut self, m: usize) -> Result<(), CensusError> {
        let ball = self.ball();
        let mut found = Vec::new();
        let mut inverse_pairs = 0u64;
        for form in ball.layer(m) {
            let r = ball.r_set_of(form)?;
            if r.has_inverse_pair() {
                inverse_pairs += 1;
            } else {
                found.push((Self::rset_key(r.letters()), form.to_word()));
            }
        }
        self.report.checked += ball.layer(m).len() as u64;
        if inverse_pairs > 0 {
            self.report.notes.push(format!("{inverse_pairs} braids of length {m} have an R-set with an inverse pair"));
        }
        for (key, word) in found {
            self.rsets.entry(key).or_insert_with(|| word.render());
        }
        Ok(())
    }

    fn dead_end(&mut self, m: usize) -> Result<(), CensusError> {
        let ball = self.ball();
        let mut found = Vec::new();
        for form in ball.layer(m) {
            if ball.is_dead_end_form(form)? {
                found.push(form.to_word());
            }
        }
        self.report.checked += ball.layer(m).len() as u64;
        for w in &found {
            self.counterexample(&[w], "dead end");
        }
        Ok(())
    }

    /// All inverse-free letter sets, as keys.
    fn inverse_free_sets(&self) -> Vec<(String, Vec<Letter>)> {
        let g = self.n - 1;
        (0..3usize.pow(g as u32))
            .map(|mut code| {
                let mut letters = Vec::new();
                for i in 1..=g {
                    match code % 3 {
                        1 => letters.push(Letter::pos(i)),
                        2 => letters.push(Letter::neg(i)),
                        _ => {}
                    }
                    code /= 3;
                }
                letters.sort_by_key(|l| Letter::alphabet(self.n).iter().position(|a| a == l));
                (Self::rset_key(&letters), letters)
            })
            .collect()
    }

    fn finish(&mut self, id: ScanId) {
        if id == ScanId::RsetWitness {
            let mut missing = Vec::new();
            for (key, _) in self.inverse_free_sets() {
                match self.rsets.get(&key) {
                    Some(word) => {
                        let w = BraidWord::parse(word, self.n).expect("rendered word");
                        self.example(&[&w], format!("R = {{{key}}}"));
                    }
                    None => missing.push(format!("{{{key}}}")),
                }
            }
            if !missing.is_empty() {
                self.report.notes.push(format!("no witness found for {}", missing.join(" ")));
            }
        }
        self.report.status = if !self.report.counterexamples.is_empty() {
            ScanStatus::Counterexample
        } else if id == ScanId::Smbc3
            || (id == ScanId::RsetWitness && self.report.notes.iter().any(|n| n.starts_with("no witness")))
        {
            ScanStatus::NoCounterexampleFound
        } else {
            ScanStatus::ProvedInRange
        };
    }
}

/// Runs one scan over lengths up to `max_len`. Scans other than `hbgr`
/// and `blocks` need a ball of radius at least `max_len`.
pub fn conjecture_scan(
    id: ScanId,
    strands: usize,
    max_len: usize,
    ball: Option<&BallTable>,
    opts: &ScanOptions,
) -> Result<ConjectureReport, CensusError> {
    if strands < 2 {
        return Err(CensusError::TooFewStrands(2));
    }
    if id.needs_ball() {
        let b = ball.ok_or(CensusError::InsufficientBall { radius: 0, needed: max_len })?;
        if b.strands() != strands {
            return Err(CensusError::StrandMismatch { ball: b.strands(), expected: strands });
        }
        if b.radius() < max_len {
            return Err(CensusError::InsufficientBall { radius: b.radius(), needed: max_len });
        }
    }
    if let Some(p) = &opts.pattern {
        if p.len() != strands - 1 || p.entries().contains(&PatternEntry::Unconstrained) {
            return Err(CensusError::Checkpoint(format!("pattern {p} is not a full pattern on {strands} strands")));
        }
    }
    let fresh = ConjectureReport {
        conjecture: id,
        strands,
        max_length: max_len,
        ball_radius: ball.map(BallTable::radius),
        conj_bound: (id == ScanId::Smbc3).then_some(opts.conj_bound),
        status: ScanStatus::NoCounterexampleFound,
        counterexamples: Vec::new(),
        examples: Vec::new(),
        notes: Vec::new(),
        checked: 0,
        completed_length: 0,
    };
    let (report, rsets) = match &opts.checkpoint {
        Some(path) if path.exists() => resume(path, &fresh)?,
        _ => (fresh, BTreeMap::new()),
    };
    let start = report.completed_length + 1;
    let mut scanner = Scanner { n: strands, ball, opts, report, rsets };
    // rset-witness and dead-end also look at the identity
    if start == 1 && matches!(id, ScanId::RsetWitness | ScanId::DeadEnd) {
        scanner.scan_length(id, 0)?;
    }
    for m in start..=max_len {
        scanner.scan_length(id, m)?;
        scanner.report.completed_length = m;
        if let Some(path) = &opts.checkpoint {
            save(path, &scanner.report, &scanner.rsets)?;
        }
    }
    scanner.finish(id);
    if let Some(path) = &opts.checkpoint {
        save(path, &scanner.report, &scanner.rsets)?;
    }
    Ok(scanner.report)
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    report: ConjectureReport,
    rsets: BTreeMap<String, String>,
}

fn save(path: &PathBuf, report: &ConjectureReport, rsets: &BTreeMap<String, String>) -> Result<(), CensusError> {
    let data = Checkpoint { report: report.clone(), rsets: rsets.clone() };
    let text = serde_json::to_string_pretty(&data).expect("serializable");
    fs::write(path, text).map_err(|e| CensusError::Checkpoint(e.to_string()))
}

fn resume(
    path: &PathBuf,
    fresh: &ConjectureReport,
) -> Result<(ConjectureReport, BTreeMap<String, String>), CensusError> {
    let text = fs::read_to_string(path).map_err(|e| CensusError::Checkpoint(e.to_string()))?;
    let data: Checkpoint = serde_json::from_str(&text).map_err(|e| CensusError::Checkpoint(e.to_string()))?;
    let r = &data.report;
    if r.conjecture != fresh.conjecture || r.strands != fresh.strands || r.max_length < r.completed_length {
        return Err(CensusError::Checkpoint("checkpoint belongs to a different scan".into()));
    }
    let mut report = data.report;
    report.max_length = fresh.max_length;
    report.ball_radius = fresh.ball_radius;
    if report.completed_length >= fresh.max_length {
        // a finished scan: recompute the summary only
        report.examples.clear();
        report.notes.retain(|n| !n.starts_with("no witness"));
        report.completed_length = fresh.max_length;
    }
    Ok((report, data.rsets))
}

/// The three equivalent conditions for presentations with even-length
/// relations, each checked over a ball: extension `ws -> wss` for geodesics
/// of length `< L`, no R-set containing a letter and its inverse, and one of
/// `ws`, `ws^{-1}` geodesic for every geodesic `w` of length `< L`.
pub fn lemma_conditions(ball: &BallTable, max_len: usize) -> Result<[bool; 3], CensusError> {
    if ball.radius() < max_len {
        return Err(CensusError::InsufficientBall { radius: ball.radius(), needed: max_len });
    }
    let alphabet = Letter::alphabet(ball.strands());
    let mut extension = true;
    let mut one_side = true;
    ball.for_each_geodesic(max_len - 1, |w, f| {
        let l = w.len() as u32;
        let s = *w.last().expect("nonempty");
        extension &= ball.length_of(&f.mul_letter(s)) == Some(l + 1);
        for &s in &alphabet {
            one_side &= ball.length_of(&f.mul_letter(s)) == Some(l + 1)
                || ball.length_of(&f.mul_letter(s.inverse())) == Some(l + 1);
        }
    })?;
    // the empty word
    let mut no_pairs = true;
    for m in 0..=ball.radius() {
        for f in ball.layer(m) {
            no_pairs &= !ball.r_set_of(f)?.has_inverse_pair();
        }
    }
    Ok([extension, no_pairs, one_side])
}
