#pragma once

#include <array>
#include <cassert>
#include <span>
#include <vector>

#include "ivg/graph.hpp"

namespace ivg {

/// Ordered partition of the unvisited vertices, refined by pivot neighborhoods.
///
/// Classes are kept in decreasing label order: the head class holds the
/// unvisited vertices with the lexicographically largest label. Each class
/// keeps `Views` independent member lists (e.g. one by a tie-break key, one by
/// a reference ordering). Refining by a neighborhood given in a view's order
/// appends moved vertices in that order, so a list that starts sorted by some
/// key stays sorted after every split.
template <int Views = 1>
class PartitionRefinement {
 public:
  using ClassId = std::int32_t;
  static constexpr ClassId kNone = -1;

  /// `initial[view]` lists every vertex 1..n once in that view's order.
  PartitionRefinement(Vertex n, const std::array<std::span<const Vertex>, Views>& initial)
      : cls_(static_cast<std::size_t>(n) + 1, kNone) {
    for (int view = 0; view < Views; ++view) {
      prev_[view].assign(static_cast<std::size_t>(n) + 1, 0);
      next_[view].assign(static_cast<std::size_t>(n) + 1, 0);
    }
    classes_.reserve(2 * static_cast<std::size_t>(n) + 2);
    if (n == 0) return;
    ClassId c = new_class();
    first_class_ = c;
    for (int view = 0; view < Views; ++view) {
      for (Vertex v : initial[view]) append(view, c, v);
    }
    for (Vertex v : initial[0]) cls_[v] = c;
    classes_[c].size = n;
  }

  bool done() const { return first_class_ == kNone; }
  ClassId head() const { return first_class_; }
  ClassId class_of(Vertex v) const { return cls_[v]; }
  bool visited(Vertex v) const { return cls_[v] == kNone; }
  std::int32_t size(ClassId c) const { return classes_[c].size; }
  Vertex first(ClassId c, int view = 0) const { return classes_[c].head[view]; }
  Vertex last(ClassId c, int view = 0) const { return classes_[c].tail[view]; }
  ClassId next_class(ClassId c) const { return classes_[c].next; }
  Vertex next_member(Vertex v, int view = 0) const { return next_[view][v]; }

  /// Marks v visited and drops it from its class.
  void remove(Vertex v) {
    ClassId c = cls_[v];
    assert(c != kNone);
    for (int view = 0; view < Views; ++view) unlink(view, c, v);
    cls_[v] = kNone;
    if (--classes_[c].size == 0) drop_class(c);
  }

  /// Splits every class into (members in `pivot_neighbors`, the rest), the
  /// first part placed immediately before the rest. `pivot_neighbors[view]`
  /// must hold the same vertex set, listed in that view's order; visited
  /// vertices are skipped.
  void refine(const std::array<std::span<const Vertex>, Views>& pivot_neighbors) {
    ++round_;
    touched_.clear();
    for (Vertex w : pivot_neighbors[0]) {
      ClassId c = cls_[w];
      if (c == kNone) continue;
      Class& old = classes_[c];
      if (old.stamp != round_) {
        old.stamp = round_;
        ClassId split = new_class();
        Class& fresh = classes_[split];
        Class& parent = classes_[c];  // re-bound: new_class may reallocate
        parent.child = split;
        fresh.parent = c;
        fresh.stamp = round_;
        fresh.prev = parent.prev;
        fresh.next = c;
        if (parent.prev != kNone) classes_[parent.prev].next = split;
        else first_class_ = split;
        parent.prev = split;
        touched_.push_back(c);
      }
      Class& parent = classes_[c];
      ClassId split = parent.child;
      unlink(0, c, w);
      append(0, split, w);
      --parent.size;
      ++classes_[split].size;
      cls_[w] = split;
    }
    for (int view = 1; view < Views; ++view) {
      for (Vertex w : pivot_neighbors[view]) {
        ClassId split = cls_[w];
        if (split == kNone) continue;
        unlink(view, classes_[split].parent, w);
        append(view, split, w);
      }
    }
    for (ClassId c : touched_) {
      if (classes_[c].size == 0) drop_class(c);
    }
  }

 private:
  struct Class {
    std::array<Vertex, Views> head{};
    std::array<Vertex, Views> tail{};
    std::int32_t size = 0;
    ClassId prev = kNone;
    ClassId next = kNone;
    ClassId parent = kNone;
    ClassId child = kNone;
    std::uint64_t stamp = 0;
  };

  ClassId new_class() {
    ClassId id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      classes_[id] = Class{};
    } else {
      id = static_cast<ClassId>(classes_.size());
      classes_.emplace_back();
    }
    return id;
  }

  void drop_class(ClassId c) {
    Class& k = classes_[c];
    if (k.prev != kNone) classes_[k.prev].next = k.next;
    else first_class_ = k.next;
    if (k.next != kNone) classes_[k.next].prev = k.prev;
    k.stamp = 0;
    free_.push_back(c);
  }

  void append(int view, ClassId c, Vertex v) {
    Class& k = classes_[c];
    prev_[view][v] = k.tail[view];
    next_[view][v] = 0;
    if (k.tail[view] != 0) next_[view][k.tail[view]] = v;
    else k.head[view] = v;
    k.tail[view] = v;
  }

  void unlink(int view, ClassId c, Vertex v) {
    Class& k = classes_[c];
    Vertex p = prev_[view][v];
    Vertex q = next_[view][v];
    if (p != 0) next_[view][p] = q;
    else k.head[view] = q;
    if (q != 0) prev_[view][q] = p;
    else k.tail[view] = p;
  }

  std::vector<ClassId> cls_;
  std::array<std::vector<Vertex>, Views> prev_;
  std::array<std::vector<Vertex>, Views> next_;
  std::vector<Class> classes_;
  std::vector<ClassId> free_;
  std::vector<ClassId> touched_;
  ClassId first_class_ = kNone;
  std::uint64_t round_ = 0;
};

}  // namespace ivg
