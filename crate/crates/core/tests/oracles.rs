//! The library against independently coded oracles.

mod common;

use std::collections::HashMap;

use braidscope::conway::{self, Ordering};
use braidscope::garside::CanonicalForm;
use braidscope::geodesy::build_ball;
use braidscope::word::BraidWord;
use common::{all_orderings, artin_images, for_each_word, positive_class, trim, PortGraph};

#[test]
fn normal_form_matches_artin_action() {
    for n in [3, 4] {
        let max = if n == 3 { 6 } else { 4 };
        let mut by_form: HashMap<Vec<u8>, Vec<Vec<(usize, bool)>>> = HashMap::new();
        let mut by_images = HashMap::new();
        for len in 0..=max {
            for_each_word(n, len, |w| {
                let form = CanonicalForm::from_word(w).unwrap().encode();
                let images = artin_images(w);
                let seen = by_images.entry(images.clone()).or_insert_with(|| form.clone());
                assert_eq!(seen, &form, "same action, different forms: {w}");
                let group = by_form.entry(form).or_insert_with(|| images.clone());
                assert_eq!(group, &images, "same form, different action: {w}");
            });
        }
        assert_eq!(by_form.len(), by_images.len());
    }
}

#[test]
fn positive_equality_is_rewriting_closure() {
    let n = 4;
    let mut classes: HashMap<Vec<u8>, Vec<BraidWord>> = HashMap::new();
    for len in 0..=5 {
        for_each_word(n, len, |w| {
            if w.is_positive() {
                classes.entry(CanonicalForm::from_word(w).unwrap().encode()).or_default().push(w.clone());
            }
        });
    }
    for words in classes.values() {
        let closure = positive_class(&words[0]);
        assert_eq!(closure.len(), words.len(), "class of {}", words[0]);
        assert!(words.iter().all(|w| closure.contains(w.letters())));
    }
}

#[test]
fn ball_lengths_match_breadth_first_search_on_words() {
    // shortest-word search in the Cayley graph, elements identified by action
    let n = 3;
    let ball = build_ball(n, 6).unwrap();
    let mut first_seen = HashMap::new();
    for len in 0..=6 {
        for_each_word(n, len, |w| {
            first_seen.entry(artin_images(w)).or_insert(len);
        });
    }
    for len in 0..=6 {
        for_each_word(n, len, |w| {
            assert_eq!(ball.length(w).unwrap() as usize, first_seen[&artin_images(w)], "{w}");
        });
    }
    assert_eq!(first_seen.len(), ball.len());
}

#[test]
fn conway_matches_port_graph_enumerator() {
    let orderings = all_orderings(3);
    for len in 0..=5 {
        for_each_word(3, len, |w| {
            let graph = PortGraph::new(w);
            for o in &orderings {
                let lib = conway::conway(w, o).unwrap();
                assert_eq!(lib.coefficients(), trim(graph.conway(o)).as_slice(), "{w} under {o}");
            }
        });
    }
}

#[test]
fn positive_diagrams_under_standard_ordering() {
    for len in 1..=6 {
        for_each_word(3, len, |w| {
            let top = conway::top_coefficient(w, &Ordering::standard(3)).unwrap();
            assert_eq!(top != 0, w.is_positive(), "{w}");
        });
    }
}
