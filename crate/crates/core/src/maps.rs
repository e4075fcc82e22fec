//! Functions between finite spaces and the image/preimage map classes.

use std::fmt;
use std::str::FromStr;

use crate::error::TokenError;
use crate::genclass::{ClassTable, ClosedClass, SetProperty};
use crate::space::Topology;
use crate::subset::{Subset, MAX_POINTS};
use crate::weakopen::OpenKind;

/// A total function between two spaces, stored as a dense index array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    pub dom: Topology,
    pub cod: Topology,
    image: Vec<usize>,
}

impl SpaceMap {
    pub fn new(dom: Topology, cod: Topology, image: Vec<usize>) -> Result<Self, String> {
        if image.len() != dom.n() {
            return Err(format!(
                "map assigns {} points but the domain has {}",
                image.len(),
                dom.n()
            ));
        }
        if let Some(&y) = image.iter().find(|&&y| y >= cod.n()) {
            return Err(format!("image point {y} lies outside the codomain"));
        }
        Ok(SpaceMap { dom, cod, image })
    }

    pub fn identity(t: &Topology) -> Self {
        SpaceMap {
            dom: t.clone(),
            cod: t.clone(),
            image: (0..t.n()).collect(),
        }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn image_of(&self, a: Subset) -> Subset {
        image_of(&self.image, a)
    }

    pub fn preimage(&self, b: Subset) -> Subset {
        preimage(&self.image, b)
    }

    pub fn is_injective(&self) -> bool {
        is_injective(&self.image)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_of(self.dom.full()) == self.cod.full()
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &SpaceMap) -> Result<SpaceMap, String> {
        if g.dom != self.cod {
            return Err("codomain and domain differ".into());
        }
        let image = self.image.iter().map(|&y| g.image[y]).collect();
        SpaceMap::new(self.dom.clone(), g.cod.clone(), image)
    }

    /// Assignment text `a->x, b->y`.
    pub fn describe(&self) -> String {
        describe_assignment(&self.dom, &self.cod, &self.image)
    }
}

pub fn describe_assignment(dom: &Topology, cod: &Topology, image: &[usize]) -> String {
    image
        .iter()
        .enumerate()
        .map(|(x, &y)| format!("{}->{}", dom.labels()[x], cod.labels()[y]))
        .collect::<Vec<_>>()
        .join(",")
}

fn image_of(image: &[usize], a: Subset) -> Subset {
    a.iter().fold(Subset::EMPTY, |acc, x| {
        acc.union(Subset::singleton(image[x]))
    })
}

fn preimage(image: &[usize], b: Subset) -> Subset {
    Subset::from_indices((0..image.len()).filter(|&x| b.contains(image[x])))
}

fn is_injective(image: &[usize]) -> bool {
    image_of(image, Subset::full(image.len())).len() == image.len()
}

/// A map viewed against prebuilt class tables of both ends.
#[derive(Clone, Copy)]
pub struct MapRef<'a> {
    pub dom: &'a ClassTable,
    pub cod: &'a ClassTable,
    image: [u8; MAX_POINTS],
    fibers: [Subset; MAX_POINTS],
}

impl<'a> MapRef<'a> {
    pub fn new(dom: &'a ClassTable, cod: &'a ClassTable, image: &[usize]) -> Self {
        debug_assert_eq!(image.len(), dom.n());
        let mut img = [0u8; MAX_POINTS];
        let mut fibers = [Subset::EMPTY; MAX_POINTS];
        for (x, &y) in image.iter().enumerate() {
            img[x] = y as u8;
            fibers[y] = fibers[y].union(Subset::singleton(x));
        }
        MapRef {
            dom,
            cod,
            image: img,
            fibers,
        }
    }

    pub fn image(&self) -> Vec<usize> {
        self.image[..self.dom.n()]
            .iter()
            .map(|&y| y as usize)
            .collect()
    }

    #[inline]
    pub fn image_of(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, x| {
            acc.union(Subset::singleton(self.image[x] as usize))
        })
    }

    #[inline]
    pub fn preimage(&self, b: Subset) -> Subset {
        b.iter()
            .fold(Subset::EMPTY, |acc, y| acc.union(self.fibers[y]))
    }

    pub fn is_injective(&self) -> bool {
        self.image_of(self.dom.space().full()).len() == self.dom.n()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_of(self.dom.space().full()) == self.cod.space().full()
    }

    pub fn satisfies(&self, p: MapPredicate) -> bool {
        self.violation(p).is_none()
    }

    /// A set witnessing that `p` fails: a domain set for image predicates,
    /// a codomain set for preimage predicates, a codomain neighborhood for
    /// irresoluteness.
    pub fn violation(&self, p: MapPredicate) -> Option<Subset> {
        match p {
            MapPredicate::Image { source, target } => self
                .dom
                .family(source)
                .iter()
                .find(|&a| !self.cod.has(target, self.image_of(a))),
            MapPredicate::Preimage { source, target } => self
                .cod
                .family(source)
                .iter()
                .find(|&b| !self.dom.has(target, self.preimage(b))),
            MapPredicate::SoftlyIrresolute => self.irresolute_violation(),
        }
    }

    fn irresolute_violation(&self) -> Option<Subset> {
        let cod = self.cod;
        for x in 0..self.dom.n() {
            let y = self.image[x] as usize;
            for v in cod.space().subsets() {
                if !cod.pigdhat_interior(v).contains(y) {
                    continue;
                }
                let s = self.dom.pigdhat_closure(self.preimage(v));
                if !self.dom.pigdhat_interior(s).contains(x) {
                    return Some(v);
                }
            }
        }
        None
    }

    pub fn is(&self, c: MapClass) -> bool {
        self.satisfies(c.predicate())
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.dom.n() == self.cod.n()
            && self.is_injective()
            && self.is(MapClass::Continuous)
            && self.is(MapClass::OpenMap)
    }
}

/// Decidable map property: images of a source family land in a target
/// property, preimages do, or the neighborhood-based irresoluteness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapPredicate {
    /// `f(A)` has `target` in the codomain for every `A` with `source` in
    /// the domain.
    Image {
        source: SetProperty,
        target: SetProperty,
    },
    /// `f⁻¹(B)` has `target` in the domain for every `B` with `source` in
    /// the codomain.
    Preimage {
        source: SetProperty,
        target: SetProperty,
    },
    SoftlyIrresolute,
}

const CLOSED: SetProperty = SetProperty::Closed(ClosedClass::Closed);
const RC: SetProperty = SetProperty::REGULAR_CLOSED;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapClass {
    Continuous,
    OpenMap,
    ClosedMap,
    AlmostClosed,
    PiGDhatClosed,
    AlmostPiGDhatClosed,
    PiContinuous,
    PiGAlphaContinuous,
    PiGDhatContinuous,
    AlmostContinuous,
    AlmostPiContinuous,
    AlmostPiGAlphaContinuous,
    AlmostPiGDhatContinuous,
    RcPreserving,
    SoftlyPiGDhatIrresolute,
    /// Preimages of πgD̂-closed sets are πgD̂-closed.
    PiGDhatIrresolute,
}

impl MapClass {
    pub const ALL: [MapClass; 16] = [
        MapClass::Continuous,
        MapClass::OpenMap,
        MapClass::ClosedMap,
        MapClass::AlmostClosed,
        MapClass::PiGDhatClosed,
        MapClass::AlmostPiGDhatClosed,
        MapClass::PiContinuous,
        MapClass::PiGAlphaContinuous,
        MapClass::PiGDhatContinuous,
        MapClass::AlmostContinuous,
        MapClass::AlmostPiContinuous,
        MapClass::AlmostPiGAlphaContinuous,
        MapClass::AlmostPiGDhatContinuous,
        MapClass::RcPreserving,
        MapClass::SoftlyPiGDhatIrresolute,
        MapClass::PiGDhatIrresolute,
    ];

    pub fn token(self) -> &'static str {
        match self {
            MapClass::Continuous => "continuous",
            MapClass::OpenMap => "open",
            MapClass::ClosedMap => "closed",
            MapClass::AlmostClosed => "almost-closed",
            MapClass::PiGDhatClosed => "pigdhat-closed",
            MapClass::AlmostPiGDhatClosed => "almost-pigdhat-closed",
            MapClass::PiContinuous => "pi-continuous",
            MapClass::PiGAlphaContinuous => "pigalpha-continuous",
            MapClass::PiGDhatContinuous => "pigdhat-continuous",
            MapClass::AlmostContinuous => "almost-continuous",
            MapClass::AlmostPiContinuous => "almost-pi-continuous",
            MapClass::AlmostPiGAlphaContinuous => "almost-pigalpha-continuous",
            MapClass::AlmostPiGDhatContinuous => "almost-pigdhat-continuous",
            MapClass::RcPreserving => "rc-preserving",
            MapClass::SoftlyPiGDhatIrresolute => "softly-pigdhat-irresolute",
            MapClass::PiGDhatIrresolute => "pigdhat-irresolute",
        }
    }

    pub fn predicate(self) -> MapPredicate {
        use MapPredicate::*;
        let class = SetProperty::Closed;
        match self {
            MapClass::Continuous => Preimage {
                source: CLOSED,
                target: CLOSED,
            },
            MapClass::OpenMap => Image {
                source: SetProperty::Open(OpenKind::Open),
                target: SetProperty::Open(OpenKind::Open),
            },
            MapClass::ClosedMap => Image {
                source: CLOSED,
                target: CLOSED,
            },
            MapClass::AlmostClosed => Image {
                source: RC,
                target: CLOSED,
            },
            MapClass::PiGDhatClosed => Image {
                source: CLOSED,
                target: class(ClosedClass::PiGDhat),
            },
            MapClass::AlmostPiGDhatClosed => Image {
                source: RC,
                target: class(ClosedClass::PiGDhat),
            },
            MapClass::PiContinuous => Preimage {
                source: CLOSED,
                target: SetProperty::PI_CLOSED,
            },
            MapClass::PiGAlphaContinuous => Preimage {
                source: CLOSED,
                target: class(ClosedClass::PiGAlpha),
            },
            MapClass::PiGDhatContinuous => Preimage {
                source: CLOSED,
                target: class(ClosedClass::PiGDhat),
            },
            MapClass::AlmostContinuous => Preimage {
                source: RC,
                target: CLOSED,
            },
            MapClass::AlmostPiContinuous => Preimage {
                source: RC,
                target: SetProperty::PI_CLOSED,
            },
            MapClass::AlmostPiGAlphaContinuous => Preimage {
                source: RC,
                target: class(ClosedClass::PiGAlpha),
            },
            MapClass::AlmostPiGDhatContinuous => Preimage {
                source: RC,
                target: class(ClosedClass::PiGDhat),
            },
            MapClass::RcPreserving => Image {
                source: RC,
                target: RC,
            },
            MapClass::SoftlyPiGDhatIrresolute => SoftlyIrresolute,
            MapClass::PiGDhatIrresolute => Preimage {
                source: class(ClosedClass::PiGDhat),
                target: class(ClosedClass::PiGDhat),
            },
        }
    }
}

impl fmt::Display for MapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for MapClass {
    type Err = TokenError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MapClass::ALL
            .into_iter()
            .find(|c| c.token() == s)
            .ok_or_else(|| TokenError::Unknown(s.to_string()))
    }
}

impl MapPredicate {
    pub fn token(self) -> String {
        if let Some(c) = MapClass::ALL.into_iter().find(|c| c.predicate() == self) {
            return c.token().to_string();
        }
        let almost = |source| if source == RC { "almost-" } else { "" };
        match self {
            MapPredicate::Image { source, target } => format!("{}{}", almost(source), target),
            MapPredicate::Preimage { source, target } => {
                let t = target.token();
                let head = t.strip_suffix("-closed").unwrap_or(&t);
                format!("{}{}-continuous", almost(source), head)
            }
            MapPredicate::SoftlyIrresolute => MapClass::SoftlyPiGDhatIrresolute.token().into(),
        }
    }
}

impl fmt::Display for MapPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl FromStr for MapPredicate {
    type Err = TokenError;

    /// Named classes, plus `[almost-]<prop>-closed` (images of closed or
    /// regular closed sets have `<prop>-closed`) and
    /// `[almost-]<prop>-continuous` (preimages of closed or regular closed
    /// sets have `<prop>-closed`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(c) = s.parse::<MapClass>() {
            return Ok(c.predicate());
        }
        let unknown = || TokenError::Unknown(s.to_string());
        let (source, rest) = match s.strip_prefix("almost-") {
            Some(rest) => (RC, rest),
            None => (CLOSED, s),
        };
        if let Some(head) = rest.strip_suffix("-continuous") {
            let target: SetProperty = format!("{head}-closed").parse().map_err(|_| unknown())?;
            return Ok(MapPredicate::Preimage { source, target });
        }
        if rest.ends_with("-closed") || rest == "closed" {
            let target: SetProperty = rest.parse().map_err(|_| unknown())?;
            return Ok(MapPredicate::Image { source, target });
        }
        Err(unknown())
    }
}

/// Arrows of the map diagram: each row's plain class implies its almost
/// variant, and closedness of images weakens down each column.
pub fn map_diagram_arrows() -> Vec<(MapPredicate, MapPredicate)> {
    let img = |source, target| MapPredicate::Image { source, target };
    let c = SetProperty::Closed;
    let left = [
        CLOSED,
        SetProperty::ALPHA_CLOSED,
        c(ClosedClass::AlphaG),
        c(ClosedClass::PiGAlpha),
    ];
    let right = [
        CLOSED,
        c(ClosedClass::Dhat),
        c(ClosedClass::GDhat),
        c(ClosedClass::PiGDhat),
    ];
    let mut arrows = Vec::new();
    for i in 0..4 {
        arrows.push((img(CLOSED, left[i]), img(RC, right[i])));
        if i + 1 < 4 {
            arrows.push((img(CLOSED, left[i]), img(CLOSED, left[i + 1])));
            arrows.push((img(RC, right[i]), img(RC, right[i + 1])));
        }
    }
    arrows
}

/// First arrow of the map diagram violated by `f`.
pub fn check_map_diagram(f: &MapRef) -> Option<(MapPredicate, MapPredicate)> {
    map_diagram_arrows()
        .into_iter()
        .find(|&(from, to)| f.satisfies(from) && !f.satisfies(to))
}

pub fn is_map_class(f: &SpaceMap, c: MapClass) -> bool {
    let dom = ClassTable::build(&f.dom);
    let cod = ClassTable::build(&f.cod);
    MapRef::new(&dom, &cod, &f.image).is(c)
}

pub fn is_homeomorphism(f: &SpaceMap) -> bool {
    let dom = ClassTable::build(&f.dom);
    let cod = ClassTable::build(&f.cod);
    MapRef::new(&dom, &cod, &f.image).is_homeomorphism()
}

/// All `m^n` assignments `{0..n} → {0..m}` in lexicographic order, the
/// first point most significant.
#[derive(Clone, Debug)]
pub struct Assignments {
    n: usize,
    m: usize,
    next: Option<Vec<usize>>,
}

impl Assignments {
    pub fn new(n: usize, m: usize) -> Self {
        let next = if m == 0 && n > 0 {
            None
        } else {
            Some(vec![0; n])
        };
        Assignments { n, m, next }
    }

    pub fn count(n: usize, m: usize) -> u128 {
        (m as u128).pow(n as u32)
    }
}

impl Iterator for Assignments {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = self.n;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.m {
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Every map `dom → cod`, optionally restricted to those in all of
/// `filter`, in lexicographic order of assignments.
pub fn enumerate_maps<'a>(
    dom: &'a Topology,
    cod: &'a Topology,
    filter: &'a [MapClass],
) -> impl Iterator<Item = SpaceMap> + 'a {
    let tables = if filter.is_empty() {
        None
    } else {
        Some((ClassTable::build(dom), ClassTable::build(cod)))
    };
    Assignments::new(dom.n(), cod.n()).filter_map(move |image| {
        if let Some((d, c)) = &tables {
            let f = MapRef::new(d, c, &image);
            if !filter.iter().all(|&k| f.is(k)) {
                return None;
            }
        }
        Some(SpaceMap {
            dom: dom.clone(),
            cod: cod.clone(),
            image,
        })
    })
}
