use num_traits::Zero;

use super::{WeylElement, WeylGroup};
use crate::num::Rational;

#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Index of the representative (least element of the class).
    pub rep_index: usize,
    pub representative: WeylElement,
    pub size: usize,
    pub element_order: usize,
    /// `det(xI − w)` on the root span, increasing degree.
    pub char_poly: Vec<Rational>,
    pub elliptic: bool,
    pub members: Vec<u32>,
}

/// Classes by orbit closure under conjugation by simple reflections, sorted
/// by representative index (so the identity class comes first).
pub fn conjugacy_classes(g: &WeylGroup) -> Vec<ConjClass> {
    let n = g.rank;
    let size = g.order();
    let mut class_of = vec![u32::MAX; size];
    let mut classes = Vec::new();
    for start in 0..size {
        if class_of[start] != u32::MAX {
            continue;
        }
        let id = classes.len() as u32;
        class_of[start] = id;
        let mut members = vec![start as u32];
        let mut i = 0;
        while i < members.len() {
            let x = members[i] as usize;
            for s in 0..n {
                let y = g.right_mul(g.left_mul(s, x), s);
                if class_of[y] == u32::MAX {
                    class_of[y] = id;
                    members.push(y as u32);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let rep = g.element(start);
        let char_poly = rep.char_poly();
        // det(1 − w) is the value of det(xI − w) at x = 1
        let at_one: Rational = char_poly.iter().cloned().sum();
        classes.push(ConjClass {
            rep_index: start,
            size: members.len(),
            element_order: g.element_order(start),
            elliptic: !at_one.is_zero(),
            char_poly,
            representative: rep,
            members,
        });
    }
    classes
}

pub fn elliptic_class_count(classes: &[ConjClass]) -> usize {
    classes.iter().filter(|c| c.elliptic).count()
}
