use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{is_contranormal, PermGroup, Permutation, Subgroup};

/// A finite-index subgroup of the free group `⟨x, y⟩`: the stabilizer of
/// `basepoint` under the transitive action `x ↦ sigma_x`, `y ↦ sigma_y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoverPair {
    sigma_x: Permutation,
    sigma_y: Permutation,
    /// 0-based.
    basepoint: usize,
}

/// Relabeled images of `x` and `y`; equal forms mean based-isomorphic covers.
pub type CanonicalForm = (Vec<u32>, Vec<u32>);

impl CoverPair {
    pub fn new(sigma_x: Permutation, sigma_y: Permutation, basepoint: usize) -> Result<Self> {
        if sigma_x.degree() != sigma_y.degree() {
            return Err(Error::DegreeMismatch {
                expected: sigma_x.degree(),
                found: sigma_y.degree(),
            });
        }
        if basepoint >= sigma_x.degree() {
            return Err(Error::InvalidPermutation(format!(
                "basepoint {} outside 1..={}",
                basepoint + 1,
                sigma_x.degree()
            )));
        }
        let pair = CoverPair {
            sigma_x,
            sigma_y,
            basepoint,
        };
        if !pair.is_transitive() {
            return Err(Error::NotTransitive);
        }
        Ok(pair)
    }

    pub(crate) fn from_images_unchecked(x: Vec<usize>, y: Vec<usize>, basepoint: usize) -> Self {
        CoverPair {
            sigma_x: Permutation::from_images(x).expect("valid images"),
            sigma_y: Permutation::from_images(y).expect("valid images"),
            basepoint,
        }
    }

    /// Number of sheets, i.e. the index of the subgroup.
    pub fn n(&self) -> usize {
        self.sigma_x.degree()
    }

    pub fn sigma_x(&self) -> &Permutation {
        &self.sigma_x
    }

    pub fn sigma_y(&self) -> &Permutation {
        &self.sigma_y
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn with_basepoint(&self, basepoint: usize) -> Result<Self> {
        CoverPair::new(self.sigma_x.clone(), self.sigma_y.clone(), basepoint)
    }

    /// The same subgroup with the roles of `x` and `y` exchanged.
    pub fn mirror(&self) -> Self {
        CoverPair {
            sigma_x: self.sigma_y.clone(),
            sigma_y: self.sigma_x.clone(),
            basepoint: self.basepoint,
        }
    }

    fn generators(&self) -> [Permutation; 4] {
        [
            self.sigma_x.clone(),
            self.sigma_x.inverse(),
            self.sigma_y.clone(),
            self.sigma_y.inverse(),
        ]
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(p) = stack.pop() {
            for q in [self.sigma_x.apply(p), self.sigma_y.apply(p)] {
                if !seen[q] {
                    seen[q] = true;
                    count += 1;
                    stack.push(q);
                }
            }
        }
        count == n
    }

    /// `point · w` for a word over `x`, `X = x⁻¹`, `y`, `Y = y⁻¹`, read
    /// left to right. Points are 0-based.
    pub fn apply_word(&self, word: &str, point: usize) -> Result<usize> {
        let [x, xi, y, yi] = self.generators();
        word.chars().try_fold(point, |p, c| match c {
            'x' => Ok(x.apply(p)),
            'X' => Ok(xi.apply(p)),
            'y' => Ok(y.apply(p)),
            'Y' => Ok(yi.apply(p)),
            _ => Err(Error::InvalidPermutation(format!("letter {c:?} is not one of x, X, y, Y"))),
        })
    }

    /// Whether the word lies in the subgroup.
    pub fn contains_word(&self, word: &str) -> Result<bool> {
        Ok(self.apply_word(word, self.basepoint)? == self.basepoint)
    }

    /// Breadth-first relabeling from the basepoint, following `x, X, y, Y`.
    pub fn canonical_form(&self) -> CanonicalForm {
        let n = self.n();
        let gens = self.generators();
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[self.basepoint] = 0;
        order.push(self.basepoint);
        let mut queue = VecDeque::from([self.basepoint]);
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q = g.apply(p);
                if label[q] == u32::MAX {
                    label[q] = order.len() as u32;
                    order.push(q);
                    queue.push_back(q);
                }
            }
        }
        let relabel = |g: &Permutation| order.iter().map(|&p| label[g.apply(p)]).collect();
        (relabel(&self.sigma_x), relabel(&self.sigma_y))
    }

    /// Least canonical form over all basepoints; equal for conjugate subgroups.
    pub fn conjugacy_form(&self) -> CanonicalForm {
        (0..self.n())
            .map(|b| {
                CoverPair {
                    basepoint: b,
                    ..self.clone()
                }
                .canonical_form()
            })
            .min()
            .expect("at least one point")
    }

    /// `t_p` for each point: a permutation of the image group sending the
    /// basepoint to `p`, as a product of `sigma_x`, `sigma_y` and inverses.
    fn transversal(&self) -> Vec<Permutation> {
        let n = self.n();
        let gens = self.generators();
        let mut t: Vec<Option<Permutation>> = vec![None; n];
        t[self.basepoint] = Some(Permutation::identity(n));
        let mut queue = VecDeque::from([self.basepoint]);
        while let Some(p) = queue.pop_front() {
            let tp = t[p].clone().expect("visited");
            for g in &gens {
                let q = g.apply(p);
                if t[q].is_none() {
                    t[q] = Some(tp.then(g));
                    queue.push_back(q);
                }
            }
        }
        t.into_iter().map(|x| x.expect("transitive")).collect()
    }

    /// Schreier generators `t_p · s · t_{p·s}⁻¹` of the basepoint stabilizer
    /// in the image group, identities dropped.
    pub fn schreier_generators(&self) -> Vec<Permutation> {
        let t = self.transversal();
        let mut out = Vec::new();
        for (p, tp) in t.iter().enumerate() {
            for s in [&self.sigma_x, &self.sigma_y] {
                let g = tp.then(s).then(&t[s.apply(p)].inverse());
                if !g.is_identity() && !out.contains(&g) {
                    out.push(g);
                }
            }
        }
        out
    }

    /// The subgroup is normal in the free group iff the image group acts
    /// regularly, i.e. the basepoint stabilizer in the image is trivial.
    pub fn is_normal(&self) -> bool {
        self.schreier_generators().is_empty()
    }

    /// The subgroup is contranormal in the free group iff the basepoint
    /// stabilizer `I₁` is contranormal in the image group `I`.
    ///
    /// The normal closure of `I₁` is generated by all point stabilizers,
    /// the conjugates `t_p⁻¹ I₁ t_p`. A normal subgroup containing `I₁` is
    /// all of `I` iff it is transitive, so only its orbits are needed and
    /// `I` is never enumerated.
    pub fn is_contranormal(&self) -> bool {
        let n = self.n();
        let schreier = self.schreier_generators();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        let mut components = n;
        for tp in self.transversal() {
            let tpi = tp.inverse();
            for s in &schreier {
                let g = tpi.then(s).then(&tp);
                for a in 0..n {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, g.apply(a)));
                    if ra != rb {
                        parent[ra] = rb;
                        components -= 1;
                    }
                }
            }
            if components == 1 {
                return true;
            }
        }
        components == 1
    }

    /// The image group `I = ⟨sigma_x, sigma_y⟩`, enumerated.
    pub fn image_group(&self, max_order: usize) -> Result<PermGroup> {
        PermGroup::generate_with_limit(self.n(), vec![self.sigma_x.clone(), self.sigma_y.clone()], max_order)
    }

    /// Contranormality by enumerating `I` and taking the normal closure of
    /// the basepoint stabilizer. Independent of [`CoverPair::is_contranormal`].
    pub fn is_contranormal_by_closure(&self, max_order: usize) -> Result<bool> {
        let group = self.image_group(max_order)?;
        let stab: Vec<usize> = (0..group.order())
            .filter(|&g| group.element(g).apply(self.basepoint) == self.basepoint)
            .collect();
        let stab = Subgroup::from_elements(&group, &stab)?;
        is_contranormal(&group, &stab)
    }
}

impl fmt::Debug for CoverPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CoverPair[n={}; x={}; y={}; base={}]",
            self.n(),
            self.sigma_x,
            self.sigma_y,
            self.basepoint + 1
        )
    }
}
