//! Mixed-radix encoding of coordinate vectors as element indices.
//!
//! The first coordinate is the most significant digit, so index order is
//! lexicographic order on coordinate vectors.

use crate::set::Elem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radix {
    orders: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
}

impl Radix {
    /// Returns `None` when the product of the orders overflows `cap`.
    pub fn new(orders: &[u32], cap: usize) -> Option<Radix> {
        let mut strides = vec![0usize; orders.len()];
        let mut size = 1usize;
        for i in (0..orders.len()).rev() {
            strides[i] = size;
            size = size.checked_mul(orders[i] as usize)?;
            if size > cap {
                return None;
            }
        }
        Some(Radix {
            orders: orders.to_vec(),
            strides,
            size,
        })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn digit(&self, x: Elem, i: usize) -> u32 {
        ((x as usize / self.strides[i]) % self.orders[i] as usize) as u32
    }

    pub fn decode(&self, x: Elem) -> Vec<u32> {
        (0..self.orders.len()).map(|i| self.digit(x, i)).collect()
    }

    /// Encodes after reducing every coordinate modulo its order.
    pub fn encode_reduced(&self, coords: &[u64]) -> Elem {
        coords
            .iter()
            .zip(&self.orders)
            .zip(&self.strides)
            .map(|((&c, &d), &s)| (c % d as u64) as usize * s)
            .sum::<usize>() as Elem
    }

    /// Strict encoding: every coordinate must already be in range.
    pub fn encode(&self, coords: &[u32]) -> Option<Elem> {
        if coords.len() != self.orders.len() {
            return None;
        }
        let mut x = 0usize;
        for ((&c, &d), &s) in coords.iter().zip(&self.orders).zip(&self.strides) {
            if c >= d {
                return None;
            }
            x += c as usize * s;
        }
        Some(x as Elem)
    }

    pub fn unit(&self, i: usize) -> Elem {
        if self.orders[i] == 1 {
            0
        } else {
            self.strides[i] as Elem
        }
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let mut x = 0usize;
        for i in 0..self.orders.len() {
            let d = self.orders[i];
            let s = (self.digit(a, i) + self.digit(b, i)) % d;
            x += s as usize * self.strides[i];
        }
        x as Elem
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let mut x = 0usize;
        for i in 0..self.orders.len() {
            let d = self.orders[i];
            let s = (d - self.digit(a, i)) % d;
            x += s as usize * self.strides[i];
        }
        x as Elem
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_round_trip() {
        let r = Radix::new(&[2, 3], 100).unwrap();
        assert_eq!(r.size(), 6);
        let all: Vec<_> = (0..6).map(|x| r.decode(x)).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2]
            ]
        );
        for x in 0..6 {
            assert_eq!(r.encode(&r.decode(x)), Some(x));
        }
        assert_eq!(r.add(5, 5), r.encode(&[0, 1]).unwrap());
        assert_eq!(r.add(5, r.neg(5)), 0);
        assert!(Radix::new(&[64, 64, 64], 4096).is_none());
    }
}
