//! Verification suites. Each runs a family of exhaustive checks over a
//! bounded set of group elements and returns a [`Report`].

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::affine::{format_word, AffineRoot, AffineWeylGroup, GroupElement};
use crate::automaton::{parse_dot, Automaton};
use crate::conformance;
use crate::error::{Error, Result};
use crate::regions::{delta_minus, is_dominant_element, is_minimal_in_region, RegionEnumeration, DEFAULT_BUDGET};
use crate::report::{Check, Report, Tally};
use crate::root_system::{FiniteRoot, Rank2Kind};
use crate::sign_types::{is_realizable, zeta, Rank2Tables, Sign, SignType};
use crate::small_low::{
    cone_membership, enumerate_low, is_low, is_low_by_cone, low_in_enumeration, small_inversion_set,
    CertificateMode, SmallInvSet, SmallRootTable,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    MainTheorem,
    DescentWalls,
    Recurrences,
    Automaton,
    Tables,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::MainTheorem,
        Suite::DescentWalls,
        Suite::Recurrences,
        Suite::Automaton,
        Suite::Tables,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::DescentWalls => "descent-walls",
            Suite::Recurrences => "recurrences",
            Suite::Automaton => "automaton",
            Suite::Tables => "tables",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Default length bound for exhaustive checks.
pub fn default_bound(rank: usize) -> usize {
    match rank {
        0..=2 => 12,
        3 => 9,
        4 => 7,
        _ => 6,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Length bound for exhaustive checks over group elements.
    pub bound: usize,
    /// Cap on the number of elements any enumeration may visit.
    pub budget: usize,
    /// Length bound for the linear-programming lowness test.
    pub cone_bound: usize,
}

impl VerifyConfig {
    pub fn for_rank(rank: usize) -> Self {
        VerifyConfig {
            bound: default_bound(rank),
            budget: DEFAULT_BUDGET,
            cone_bound: 8,
        }
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }
}

pub fn run_suite(group: &AffineWeylGroup, suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    let mut report = Report::new(suite.name(), group.cartan_type(), group.rank(), cfg.bound);
    match suite {
        Suite::MainTheorem => main_theorem(group, cfg, &mut report)?,
        Suite::DescentWalls => descent_walls(group, cfg, &mut report)?,
        Suite::Recurrences => recurrences(group, cfg, &mut report)?,
        Suite::Automaton => automaton(group, cfg, &mut report)?,
        Suite::Tables => tables(group, cfg, &mut report)?,
    }
    Ok(report)
}

fn word(group: &AffineWeylGroup, w: &GroupElement) -> String {
    format_word(&group.word_from_element(w))
}

fn show_roots(set: &BTreeSet<AffineRoot>) -> String {
    let items: Vec<String> = set.iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

/// Compares two element sets, reporting one element of the symmetric
/// difference.
fn same_elements(name: &str, group: &AffineWeylGroup, a: &[GroupElement], b: &[GroupElement]) -> Check {
    let sa: HashSet<&GroupElement> = a.iter().collect();
    let sb: HashSet<&GroupElement> = b.iter().collect();
    if let Some(x) = a.iter().find(|x| !sb.contains(x)) {
        return Check::fail(name, format!("{} vs {}", a.len(), b.len()), format!("only in first: {}", word(group, x)));
    }
    if let Some(x) = b.iter().find(|x| !sa.contains(x)) {
        return Check::fail(name, format!("{} vs {}", a.len(), b.len()), format!("only in second: {}", word(group, x)));
    }
    Check::pass(name, format!("{} = {}", a.len(), b.len()))
}

/// Elements up to the larger of the configured bound and the region walk's
/// radius.
fn extended_ball(group: &AffineWeylGroup, regions: &RegionEnumeration, cfg: &VerifyConfig) -> Result<Vec<GroupElement>> {
    let radius = cfg.bound.max(regions.certified_radius());
    Ok(group.ball(radius, cfg.budget)?.into_iter().flatten().collect())
}

/// `N(w_Psi)` predicted from the ideal: the positive roots in the cone over
/// `{d - a : a in Psi}`. A root in that cone has the form `j d - g` with
/// `g > 0` and `1 <= j <= ht(g)`, so scanning `j < h` is exhaustive.
pub fn cone_inversions(group: &AffineWeylGroup, ideal: &[usize]) -> BTreeSet<AffineRoot> {
    let sys = group.system();
    let gens: Vec<AffineRoot> = delta_minus(group, ideal).into_iter().collect();
    let mut out = BTreeSet::new();
    for g in sys.positive_roots() {
        for j in 1..sys.coxeter_number() as i64 {
            let beta = AffineRoot::new(g.neg(), j);
            if cone_membership(&gens, &beta) {
                out.insert(beta);
            }
        }
    }
    out
}

fn main_theorem(group: &AffineWeylGroup, cfg: &VerifyConfig, report: &mut Report) -> Result<()> {
    let sys = group.system();
    let expected = sys.shi_region_count() as usize;
    let regions = RegionEnumeration::new(group, cfg.budget)?;
    let table = regions.table();

    report.push(Check::equal(
        "admissible sign types",
        expected,
        regions.space().enumerate(cfg.budget)?.len(),
    ));
    report.push(Check::equal("shi regions", expected, regions.len()));
    let lambda: HashSet<SmallInvSet> = regions
        .ball()
        .iter()
        .flatten()
        .map(|w| small_inversion_set(group, table, w))
        .collect();
    report.push(Check::equal("small inversion sets", expected, lambda.len()));

    let low = enumerate_low(group, CertificateMode::SuffixClosure, cfg.budget)?;
    let low_walk = low_in_enumeration(&regions);
    report.push(Check::equal("low elements", expected, low.len()));
    report.push(same_elements("low elements by both certificates", group, &low, &low_walk));
    let minima = regions.minimal_elements();
    report.push(same_elements("low elements are the region minima", group, &low, &minima));

    let images: HashSet<SmallInvSet> = low.iter().map(|w| small_inversion_set(group, table, w)).collect();
    report.push(Check::from_bool(
        "small inversion sets of low elements",
        images.len() == low.len() && images == lambda,
        format!("{} distinct images of {} low elements", images.len(), low.len()),
    ));

    let minimal_set: HashSet<&GroupElement> = minima.iter().collect();
    let low_set: HashSet<&GroupElement> = low.iter().collect();
    for (name, set, list) in [
        ("region minima are suffix-closed", &minimal_set, &minima),
        ("low elements are suffix-closed", &low_set, &low),
    ] {
        let mut t = Tally::new(name);
        for w in list.iter() {
            for s in group.descents(w).left {
                let sw = group.left_mul(s, w);
                t.record(set.contains(&sw), || format!("w = {}, s = s{s}", word(group, w)));
            }
        }
        report.push(t.finish());
    }

    let ball = extended_ball(group, &regions, cfg)?;
    let mut star = Tally::new("wall test recognizes minima");
    let mut prefix = Tally::new("minima are prefixes of their region");
    let mut minstar = Tally::new("minima have the smallest shi coefficients");
    for g in &ball {
        let region = regions
            .region_of(g)
            .ok_or_else(|| Error::Inconsistent(format!("no region for {}", word(group, g))))?;
        let w = &region.minimal_element;
        star.record(is_minimal_in_region(group, g) == (g == w), || word(group, g));
        prefix.record(group.inversion_set(w).is_subset(&group.inversion_set(g)), || {
            format!("g = {}, minimum {}", word(group, g), word(group, w))
        });
        let kw = group.shi_vector(w);
        let kg = group.shi_vector(g);
        minstar.record(kw.iter().zip(&kg).all(|(a, b)| a.abs() <= b.abs()), || {
            format!("g = {} {kg:?}, minimum {kw:?}", word(group, g))
        });
    }
    report.push(star.finish());
    report.push(prefix.finish());
    report.push(minstar.finish());

    let cat = sys.catalan_number() as usize;
    let dominant = regions.dominant_regions()?;
    report.push(Check::equal(
        "dominant regions",
        cat,
        regions.regions().iter().filter(|r| r.is_dominant).count(),
    ));
    report.push(Check::equal(
        "dominant low elements",
        cat,
        low.iter().filter(|w| is_dominant_element(group, w)).count(),
    ));
    report.push(Check::equal("root poset ideals", cat, dominant.len()));

    let mut low_dom = Tally::new("ideal elements are low and dominant");
    let mut cone = Tally::new("ideal inversion sets are cones");
    let mut walls = Tally::new("ideal right descents are the minimal roots");
    for d in &dominant {
        let w = &d.element;
        low_dom.record(is_low(group, w) && is_dominant_element(group, w), || {
            format!("ideal {:?}", d.ideal.members)
        });
        let predicted = cone_inversions(group, &d.ideal.members);
        let actual = group.inversion_set(w);
        cone.record(predicted == actual, || {
            format!("ideal {:?}: cone {} vs N {}", d.ideal.members, show_roots(&predicted), show_roots(&actual))
        });
        let nd = group.descents(w).right_roots;
        let expected = delta_minus(group, &d.ideal.minimal);
        walls.record(nd == expected, || {
            format!("ideal {:?}: {} vs {}", d.ideal.members, show_roots(&nd), show_roots(&expected))
        });
    }
    report.push(low_dom.finish());
    report.push(cone.finish());
    report.push(walls.finish());
    Ok(())
}

fn descent_walls(group: &AffineWeylGroup, cfg: &VerifyConfig, report: &mut Report) -> Result<()> {
    let sys = group.system();
    let npos = sys.num_positive();
    let regions = RegionEnumeration::new(group, cfg.budget)?;
    let table = regions.table();
    let space = regions.space();
    let separations: HashSet<SmallInvSet> = regions.regions().iter().map(|r| r.separation).collect();

    let mut theorem = Tally::new("right descents of minima are the descent roots");
    let mut inside = Tally::new("descent roots separate");
    let mut adjacency = Tally::new("descent roots by adjacent regions");
    let mut star = Tally::new("affine descent walls by the local test");
    let mut basis = Tally::new("affine basis roots of minima are right descents");
    for reg in regions.regions() {
        let w = &reg.minimal_element;
        let nd = group.descents(w).right_roots;
        let expected = table.to_roots(&reg.descent_roots);
        theorem.record(nd == expected, || {
            format!("{}: ND_R {} vs {}", reg.sign_type, show_roots(&nd), show_roots(&expected))
        });
        inside.record(reg.descent_roots.is_subset(&reg.separation), || reg.sign_type.to_string());
        let by_adjacency: SmallInvSet = reg
            .separation
            .iter()
            .filter(|&b| {
                let mut s = reg.separation;
                s.remove(b);
                separations.contains(&s)
            })
            .collect();
        adjacency.record(by_adjacency == reg.descent_roots, || {
            format!("{}: {}", reg.sign_type, table.display(&by_adjacency))
        });
        for i in 0..sys.rank() {
            if reg.sign_type.get(i) == Sign::Plus {
                star.record(
                    reg.descent_roots.contains(npos + i) == space.star_condition(&reg.sign_type, i),
                    || format!("{} at a{}", reg.sign_type, i + 1),
                );
            }
        }
        let n1 = group.basis_n1(w);
        for s in 1..group.num_generators() {
            let root = AffineRoot::new(FiniteRoot::simple(sys.rank(), s - 1).neg(), 1);
            if n1.contains(&root) {
                basis.record(nd.contains(&root), || format!("{} with {root}", reg.sign_type));
            }
        }
    }
    report.push(Check::equal("regions", sys.shi_region_count() as usize, regions.len()));
    report.push(theorem.finish());
    report.push(inside.finish());
    report.push(adjacency.finish());
    report.push(star.finish());
    report.push(basis.finish());

    // Left multiplication of a minimum by a finite left descent.
    let mut suffix = Tally::new("descent roots after a left descent");
    let mut reflected = Tally::new("signs after a left descent");
    for reg in regions.regions() {
        let w = &reg.minimal_element;
        for s in group.descents(w).left.into_iter().filter(|&s| s != 0) {
            let sw = group.left_mul(s, w);
            let Some(r1) = regions.region_of(&sw) else {
                suffix.record(false, || format!("no region for {}", word(group, &sw)));
                continue;
            };
            let simple = s - 1;
            let moved: Option<SmallInvSet> = reg
                .descent_roots
                .iter()
                .filter(|&i| i != simple)
                .map(|i| table.act(s, i))
                .collect();
            suffix.record(r1.minimal_element == sw && moved == Some(r1.descent_roots), || {
                format!("{} with s{s}", reg.sign_type)
            });
            let ok = (0..npos).filter(|&g| g != simple).all(|g| {
                let image = sys.simple_reflect_coords(simple, &sys.root(g).0);
                r1.sign_type.get(g) == reg.sign_type.get(sys.index_of(&image).expect("positive"))
            });
            reflected.record(ok, || format!("{} with s{s}", reg.sign_type));
        }
    }
    report.push(suffix.finish());
    report.push(reflected.finish());

    // Images of whole regions under finite simple reflections.
    let ball = extended_ball(group, &regions, cfg)?;
    let mut members: HashMap<SignType, Vec<&GroupElement>> = HashMap::new();
    for g in &ball {
        members.entry(zeta(group, g)).or_default().push(g);
    }
    let mut split = Tally::new("reflected region splits by level");
    let mut contained = Tally::new("some region reflects into each region");
    for reg in regions.regions() {
        for s in 1..group.num_generators() {
            let simple = s - 1;
            if reg.sign_type.get(simple) != Sign::Minus {
                continue;
            }
            for u in members.get(&reg.sign_type).into_iter().flatten() {
                let k = group.shi_vector(u)[simple];
                let y = zeta(group, &group.left_mul(s, u));
                let want = if k == -1 { Sign::Zero } else { Sign::Plus };
                let ok = y.get(simple) == want
                    && (0..npos).filter(|&g| g != simple).all(|g| {
                        let image = sys.simple_reflect_coords(simple, &sys.root(g).0);
                        y.get(g) == reg.sign_type.get(sys.index_of(&image).expect("positive"))
                    });
                split.record(ok, || format!("u = {} with s{s}", word(group, u)));
            }
            let target = zeta(group, &group.left_mul(s, &reg.minimal_element));
            let ok = members
                .get(&target)
                .into_iter()
                .flatten()
                .all(|v| zeta(group, &group.left_mul(s, v)) == reg.sign_type);
            contained.record(ok, || format!("{} with s{s}", reg.sign_type));
        }
    }
    report.push(split.finish());
    report.push(contained.finish());

    let mut lshi = Tally::new("right descents within descent roots exactly at minima");
    for g in &ball {
        let reg = regions.region_of(g).expect("every alcove has a region");
        let nd = group.descents(g).right_roots;
        let walls = table.to_roots(&reg.descent_roots);
        lshi.record(nd.is_subset(&walls) == (g == &reg.minimal_element), || word(group, g));
    }
    report.push(lshi.finish());
    Ok(())
}

/// Applies `s_{a + k d}(x_0 + b d) = s_a(x_0) + (b - k <a^v, x_0>) d`.
fn reflect_affine(group: &AffineWeylGroup, root: &AffineRoot, x: &AffineRoot) -> AffineRoot {
    let sys = group.system();
    let a = &root.finite.0;
    let pairing = 2 * sys.inner(a, &x.finite.0) / sys.inner(a, a);
    let finite: Vec<i64> = x.finite.0.iter().zip(a).map(|(xi, ai)| xi - pairing * ai).collect();
    AffineRoot::new(FiniteRoot(finite), x.delta - root.delta * pairing)
}

fn recurrences(group: &AffineWeylGroup, cfg: &VerifyConfig, report: &mut Report) -> Result<()> {
    let sys = group.system();
    let npos = sys.num_positive();
    let table = SmallRootTable::new(group);
    let layers = group.ball(cfg.bound, cfg.budget)?;
    let dist = group.bfs_distances(cfg.bound);
    let space = crate::SignTypeSpace::new(group.system_arc());
    let all_roots: Vec<FiniteRoot> = sys
        .positive_roots()
        .iter()
        .flat_map(|r| [r.clone(), r.neg()])
        .collect();
    let simple_affine: Vec<AffineRoot> = (0..group.num_generators()).map(|s| group.simple_root(s)).collect();
    let reflections: Vec<GroupElement> = (0..npos).map(|t| group.finite_reflection(t)).collect();
    let k_of = |w: &GroupElement, a: &FiniteRoot| group.shi_coefficient(w, a).expect("root");

    report.push(Check::equal(
        "ball agrees with breadth-first distances",
        dist.len(),
        layers.iter().map(Vec::len).sum::<usize>(),
    ));

    let mut simple_rec = Tally::new("shi recurrence for simple reflections");
    let mut refl_rec = Tally::new("shi recurrence for finite reflections");
    let mut antisym = Tally::new("shi coefficients are odd");
    let mut off_walls = Tally::new("representative points avoid walls");
    let mut finite = Tally::new("shi coefficients of finite elements");
    let mut negative = Tally::new("finite left descents have negative coefficients");
    let mut left_desc = Tally::new("left descents from shi vectors");
    let mut lengths = Tally::new("length four ways");
    let mut inversions = Tally::new("inversion sets two ways");
    let mut cone = Tally::new("lowness by basis and by cone");
    let mut dh = Tally::new("small inversion sets under left multiplication");
    let mut desc = Tally::new("right descent roots under left multiplication");
    let mut basis = Tally::new("descent roots lie in the basis");
    let mut left_roots = Tally::new("left descent roots are simple inversions");
    let mut nonempty = Tally::new("only the identity has no right descent");
    let mut words = Tally::new("word round trip");
    let mut action = Tally::new("root action matches reflection formula");
    let mut small = Tally::new("small inversions are inversions among small roots");
    let mut admissible = Tally::new("sign types of elements are admissible");
    let mut vectors: HashSet<Vec<i64>> = HashSet::new();

    for (len, layer) in layers.iter().enumerate() {
        for w in layer {
            let k = group.shi_vector(w);
            vectors.insert(k.clone());
            let name = || word(group, w);

            for s in 1..group.num_generators() {
                let sw = group.left_mul(s, w);
                let gen = &group.generators()[s];
                let ok = all_roots.iter().all(|a| {
                    let sa = FiniteRoot(sys.simple_reflect_coords(s - 1, &a.0));
                    k_of(&sw, a) == k_of(w, &sa) + k_of(gen, a)
                });
                simple_rec.record(ok, || format!("w = {}, s{s}", name()));
            }
            for (t, refl) in reflections.iter().enumerate() {
                let tw = group.mul(refl, w);
                let ok = all_roots.iter().all(|a| {
                    let ta = FiniteRoot(sys.reflect_coords(t, &a.0));
                    k_of(&tw, a) == k_of(w, &ta) + k_of(refl, a)
                });
                refl_rec.record(ok, || format!("w = {}, reflection in {}", name(), sys.root(t)));
            }
            antisym.record(
                sys.positive_roots().iter().all(|a| k_of(w, &a.neg()) == -k_of(w, a)),
                name,
            );
            let p = group.representative_point(w);
            off_walls.record(
                sys.positive_roots().iter().all(|a| {
                    let v = a.0.iter().zip(&p).fold(num_rational::Ratio::from_integer(0), |acc, (c, x)| acc + *x * *c);
                    !v.is_integer()
                }),
                name,
            );

            let by_action = group.inversion_set_by_action(w);
            if w.is_finite() {
                let ok = sys.positive_roots().iter().enumerate().all(|(i, a)| {
                    let inv = by_action.contains(&AffineRoot::new(a.clone(), 0));
                    k[i] == if inv { -1 } else { 0 }
                });
                finite.record(ok, name);
            }

            let d = dist[w];
            for s in 0..group.num_generators() {
                let sw = group.left_mul(s, w);
                let by_dist = dist.get(&sw).is_some_and(|&e| e < d);
                left_desc.record(group.is_left_descent(w, s) == by_dist, || format!("w = {}, s{s}", name()));
                if s > 0 && by_dist {
                    negative.record(k[s - 1] <= -1, || format!("w = {}, s{s}", name()));
                }
            }

            let n = group.inversion_set(w);
            let abs_sum: usize = k.iter().map(|x| x.unsigned_abs() as usize).sum();
            lengths.record(
                group.length(w) == len && n.len() == len && abs_sum == len && d == len,
                || format!("{}: length {len}, |N| {}, sum {abs_sum}, distance {d}", name(), n.len()),
            );
            inversions.record(n == by_action, name);
            if len <= cfg.cone_bound {
                cone.record(is_low(group, w) == is_low_by_cone(group, w), name);
            }

            let descents = group.descents(w);
            let sigma = table.to_roots(&table.from_shi_vector(&k));
            for &s in &descents.left {
                let sw = group.left_mul(s, w);
                let gen = &group.generators()[s];
                let sigma_sw = table.to_roots(&table.from_shi_vector(&group.shi_vector(&sw)));
                let moved: BTreeSet<AffineRoot> = sigma_sw
                    .iter()
                    .map(|r| group.act_on_root(gen, r))
                    .filter(SmallRootTable::is_small)
                    .collect();
                let alpha = &simple_affine[s];
                let ok = !moved.contains(alpha) && {
                    let mut m = moved.clone();
                    m.insert(alpha.clone());
                    m == sigma
                };
                dh.record(ok, || format!("w = {}, s{s}", name()));

                let nd_sw = group.descents(&sw).right_roots;
                let expected: BTreeSet<AffineRoot> = descents
                    .right_roots
                    .iter()
                    .filter(|r| *r != alpha)
                    .map(|r| group.act_on_root(gen, r))
                    .collect();
                desc.record(nd_sw == expected, || format!("w = {}, s{s}", name()));
            }
            let n1 = group.basis_n1(w);
            basis.record(
                descents.left_roots.is_subset(&n1) && descents.right_roots.is_subset(&n1),
                name,
            );
            let simple_inv: BTreeSet<AffineRoot> = simple_affine.iter().filter(|r| n.contains(r)).cloned().collect();
            left_roots.record(descents.left_roots == simple_inv, name);
            nonempty.record(descents.right.is_empty() == (len == 0), name);

            let wd = group.word_from_element(w);
            words.record(
                wd.len() == len && group.element_from_word(&wd)? == *w,
                || format!("{} ({:?})", name(), wd),
            );
            let ok = table.roots().iter().all(|r| {
                let by_word = wd.iter().rev().fold(r.clone(), |x, &s| {
                    let root = &simple_affine[s];
                    reflect_affine(group, root, &x)
                });
                by_word == group.act_on_root(w, r)
            });
            action.record(ok, name);
            let small_inv: BTreeSet<AffineRoot> = by_action.iter().filter(|r| SmallRootTable::is_small(r)).cloned().collect();
            small.record(small_inv == sigma, name);
            admissible.record(space.is_admissible(&SignType::from_shi_vector(&k)), name);
        }
    }

    // Simple reflections permute the small roots other than a_s, d - a_s.
    let mut permute = Tally::new("simple reflections permute the other small roots");
    for s in 1..group.num_generators() {
        let gen = &group.generators()[s];
        let alpha = &simple_affine[s];
        let rest: BTreeSet<AffineRoot> = table
            .roots()
            .iter()
            .filter(|r| *r != alpha && **r != AffineRoot::new(alpha.finite.neg(), 1))
            .cloned()
            .collect();
        let image: BTreeSet<AffineRoot> = rest.iter().map(|r| group.act_on_root(gen, r)).collect();
        permute.record(image == rest, || format!("s{s}"));
    }

    let total: usize = layers.iter().map(Vec::len).sum();
    report.push(Check::equal("shi vectors are distinct", total, vectors.len()));
    for t in [
        simple_rec, refl_rec, antisym, off_walls, finite, negative, left_desc, lengths, inversions, cone, dh, desc,
        basis, left_roots, nonempty, words, action, small, admissible, permute,
    ] {
        report.push(t.finish());
    }
    Ok(())
}

/// Coefficients of `prod_i (1 + t + ... + t^e_i) / (1 - t^e_i)` up to
/// `t^max_len`: the number of elements of each length.
pub fn length_generating_function(exponents: &[usize], max_len: usize) -> Vec<u128> {
    let mut c = vec![0u128; max_len + 1];
    c[0] = 1;
    for &e in exponents {
        let mut next = vec![0u128; max_len + 1];
        for (i, &v) in c.iter().enumerate() {
            for j in 0..=e {
                if i + j <= max_len {
                    next[i + j] += v;
                }
            }
        }
        for i in e..=max_len {
            next[i] += next[i - e];
        }
        c = next;
    }
    c
}

fn automaton(group: &AffineWeylGroup, cfg: &VerifyConfig, report: &mut Report) -> Result<()> {
    let sys = group.system();
    let expected = sys.shi_region_count() as usize;
    let aut = Automaton::build(group);
    let table = aut.table();
    let regions = RegionEnumeration::new(group, cfg.budget)?;

    report.push(Check::equal("states", expected, aut.num_states()));
    let lambda: HashSet<SmallInvSet> = regions
        .ball()
        .iter()
        .flatten()
        .map(|w| small_inversion_set(group, table, w))
        .collect();
    let states: HashSet<SmallInvSet> = aut.states().iter().copied().collect();
    report.push(Check::from_bool(
        "states are the small inversion sets",
        states == lambda,
        format!("{} states, {} small inversion sets", states.len(), lambda.len()),
    ));
    let labels: HashSet<String> = (0..aut.num_states()).map(|q| aut.state_label(q)).collect();
    let signs: HashSet<String> = regions.regions().iter().map(|r| r.sign_type.to_string()).collect();
    report.push(Check::from_bool(
        "state labels are the admissible sign types",
        labels == signs,
        format!("{} labels", labels.len()),
    ));

    // Every word up to the bound, read by the automaton and multiplied out.
    let letters = group.num_generators();
    let mut verdicts = Tally::new("reduced words match the length oracle");
    let mut state_sets = Tally::new("state is the small inversion set of the inverse");
    let mut word_counts = vec![0u128; cfg.bound + 1];
    let mut elements: Vec<HashSet<GroupElement>> = vec![HashSet::new(); cfg.bound + 1];
    let mut stack: Vec<(Vec<usize>, GroupElement, usize)> = vec![(Vec::new(), group.identity(), 0)];
    let mut visited = 0usize;
    while let Some((wd, w, q)) = stack.pop() {
        visited += 1;
        if visited > cfg.budget.saturating_mul(16) {
            return Err(Error::BudgetExceeded {
                budget: cfg.budget,
                what: format!("words of length {} in {}", cfg.bound, group.cartan_type()),
            });
        }
        word_counts[wd.len()] += 1;
        elements[wd.len()].insert(w.clone());
        state_sets.record(
            aut.states()[q] == small_inversion_set(group, table, &w.inverse()),
            || format_word(&wd),
        );
        if wd.len() == cfg.bound {
            continue;
        }
        for s in 0..letters {
            let ws = group.right_mul(&w, s);
            let reduced = group.length(&ws) == wd.len() + 1;
            let step = aut.step(q, s);
            let mut next = wd.clone();
            next.push(s);
            verdicts.record(step.is_some() == reduced, || format_word(&next));
            // A word with a non-reduced prefix is not reduced, and the
            // automaton has already stopped, so the subtree agrees.
            if let (Some(t), true) = (step, reduced) {
                stack.push((next, ws, t));
            }
        }
    }
    report.push(verdicts.finish());
    report.push(state_sets.finish());
    report.push(Check::equal("reduced word counts", word_counts, aut.word_counts(cfg.bound)));

    let layers = group.ball(cfg.bound, cfg.budget)?;
    let by_ball: Vec<usize> = layers.iter().map(Vec::len).collect();
    let by_words: Vec<usize> = elements.iter().map(HashSet::len).collect();
    report.push(Check::equal("elements by length", by_ball.clone(), by_words));
    let dist = group.bfs_distances(cfg.bound);
    let mut by_dist = vec![0usize; cfg.bound + 1];
    for &d in dist.values() {
        by_dist[d] += 1;
    }
    report.push(Check::equal("elements by breadth-first distance", by_ball.clone(), by_dist));
    let formula: Vec<usize> = length_generating_function(sys.exponents(), cfg.bound)
        .into_iter()
        .map(|c| c as usize)
        .collect();
    report.push(Check::equal("elements by length match the exponent product", formula, by_ball));

    let dot = aut.to_dot();
    report.push(Check::from_bool(
        "dot round trip",
        parse_dot(&dot)? == aut.transition_table(),
        format!("{} bytes", dot.len()),
    ));
    let first: Vec<Option<SmallInvSet>> = (0..letters).map(|s| aut.step(0, s).map(|q| aut.states()[q])).collect();
    let simple: Vec<Option<SmallInvSet>> = (0..letters)
        .map(|s| table.index_of(&group.simple_root(s)).map(|i| [i].into_iter().collect()))
        .collect();
    report.push(Check::equal("first letters", simple, first));
    Ok(())
}

fn tables(group: &AffineWeylGroup, cfg: &VerifyConfig, report: &mut Report) -> Result<()> {
    let tables = Rank2Tables::get();
    for kind in Rank2Kind::ALL {
        let sys = kind.system();
        let expected = sys.shi_region_count() as usize;
        let entries = tables.entries(kind);
        report.push(Check::equal(format!("{kind} table size"), expected, entries.len()));
        // Compare with the LP test over every sign type.
        let npos = sys.num_positive();
        let listed: HashSet<SignType> = entries.into_iter().collect();
        let mut t = Tally::new(format!("{kind} table matches realizable sign types"));
        for code in 0..3usize.pow(npos as u32) {
            let mut c = code;
            let x = SignType(
                (0..npos)
                    .map(|_| {
                        let s = [Sign::Minus, Sign::Zero, Sign::Plus][c % 3];
                        c /= 3;
                        s
                    })
                    .collect(),
            );
            t.record(is_realizable(&sys, &x) == listed.contains(&x), || x.to_string());
        }
        report.push(t.finish());
    }

    let space = crate::SignTypeSpace::new(group.system_arc());
    let name = group.cartan_type().to_string();
    let mut t = Tally::new("admissible sign types are realizable");
    if group.system().num_positive() <= 10 {
        for x in space.enumerate(cfg.budget)? {
            t.record(is_realizable(group.system(), &x), || x.to_string());
        }
        report.push(t.finish());
    }

    match name.as_str() {
        "A2" | "B2" => {
            let regions = RegionEnumeration::new(group, cfg.budget)?;
            for c in conformance::check_tables(&regions, cfg.budget)? {
                report.push(c);
            }
            let checks = if name == "A2" {
                conformance::check_a2_examples()?
            } else {
                let (checks, notes) = conformance::check_b2_examples()?;
                for n in notes {
                    report.note(n);
                }
                checks
            };
            for c in checks {
                report.push(c);
            }
        }
        "A4" => {
            let (checks, failing) = conformance::check_a4_pair()?;
            for c in checks {
                report.push(c);
            }
            report.note(format!("failing subsystems of the inadmissible example: {}", failing.join(" ")));
        }
        _ => report.note(format!("no reference rows for {name}")),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> AffineWeylGroup {
        AffineWeylGroup::new(t.parse().unwrap())
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn generating_function() {
        // A1~: 1, 2, 2, 2, ...
        assert_eq!(length_generating_function(&[1], 4), vec![1, 2, 2, 2, 2]);
        // A2~: 1, 3, 6, 9, 12, ...
        assert_eq!(length_generating_function(&[1, 2], 4), vec![1, 3, 6, 9, 12]);
    }

    #[test]
    fn all_suites_pass_on_a2() {
        let g = group("A2");
        let cfg = VerifyConfig::for_rank(2).with_bound(7);
        for s in Suite::ALL {
            let r = run_suite(&g, s, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn cone_inversions_of_full_ideal() {
        let g = group("B2");
        let all: Vec<usize> = (0..4).collect();
        let c = cone_inversions(&g, &all);
        assert!(c.contains(&AffineRoot::new(FiniteRoot(vec![-1, 0]), 1)));
        assert!(c.iter().all(|r| r.delta >= 1));
    }
}
