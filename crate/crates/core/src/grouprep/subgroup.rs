use crate::error::{Error, Result};

use super::FiniteGroup;

/// A subgroup given by an explicit set of parent elements; local indices
/// follow the parent order.
pub struct Subgroup<'a, G: FiniteGroup + ?Sized> {
    parent: &'a G,
    elements: Vec<usize>,
    local: Vec<u32>,
    gens: Vec<usize>,
}

impl<'a, G: FiniteGroup + ?Sized> Subgroup<'a, G> {
    pub fn from_predicate(parent: &'a G, pred: impl Fn(usize) -> bool) -> Result<Self> {
        let elements: Vec<usize> = (0..parent.order()).filter(|&x| pred(x)).collect();
        let mut local = vec![u32::MAX; parent.order()];
        for (i, &x) in elements.iter().enumerate() {
            local[x] = i as u32;
        }
        if local[parent.identity()] == u32::MAX {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        // greedy generating set, checking closure inside the set
        let mut gens: Vec<usize> = Vec::new();
        let mut in_closure = vec![false; elements.len()];
        let mut closure_size = 0;
        for (i, &x) in elements.iter().enumerate() {
            if in_closure[i] {
                continue;
            }
            gens.push(x);
            in_closure.iter_mut().for_each(|b| *b = false);
            let mut stack = vec![parent.identity()];
            in_closure[local[parent.identity()] as usize] = true;
            closure_size = 1;
            while let Some(y) = stack.pop() {
                for &s in &gens {
                    let z = parent.mul(y, s);
                    let lz = local[z];
                    if lz == u32::MAX {
                        return Err(Error::NotSubgroup("set is not closed under multiplication".into()));
                    }
                    if !in_closure[lz as usize] {
                        in_closure[lz as usize] = true;
                        closure_size += 1;
                        stack.push(z);
                    }
                }
            }
        }
        if closure_size.max(1) != elements.len() {
            return Err(Error::NotSubgroup("generated subgroup is smaller than the set".into()));
        }
        let gens = gens.iter().map(|&x| local[x] as usize).collect();
        Ok(Subgroup { parent, elements, local, gens })
    }

    pub fn parent_index(&self, local: usize) -> usize {
        self.elements[local]
    }

    pub fn local_index(&self, parent: usize) -> Option<usize> {
        let l = self.local[parent];
        (l != u32::MAX).then_some(l as usize)
    }

    pub fn parent(&self) -> &G {
        self.parent
    }
}

impl<G: FiniteGroup + ?Sized> FiniteGroup for Subgroup<'_, G> {
    fn order(&self) -> usize {
        self.elements.len()
    }
    fn identity(&self) -> usize {
        self.local[self.parent.identity()] as usize
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.local[self.parent.mul(self.elements[a], self.elements[b])] as usize
    }
    fn inv(&self, a: usize) -> usize {
        self.local[self.parent.inv(self.elements[a])] as usize
    }
    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }
}
