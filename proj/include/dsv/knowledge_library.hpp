#ifndef DSV_KNOWLEDGE_LIBRARY_HPP
#define DSV_KNOWLEDGE_LIBRARY_HPP

#include "dsv/frame.hpp"
#include "dsv/knowledge.hpp"

// Built-in knowledge sources. The same distributions ship as text files under
// data/knowledge/ so they can be edited without recompiling.

namespace dsv::library {

inline Frame shutter_frame() { return Frame{"long", "low", "next-to"}; }

/// Shutters: elongated, low edgeness, next to windows.
inline KnowledgeSource shutter_knowledge(const Frame& f = shutter_frame()) {
  return KnowledgeSource("shutter", f,
                         {{Clause::atom(f, "long"), 0.25},
                          {Clause::atom(f, "low"), 0.15},
                          {Clause::conjunction(f, {pos("long"), pos("low")}), 0.15},
                          {Clause::atom(f, "next-to"), 0.25}},
                         0.2);
}

/// Chimneys: elongated, not next to windows, texture unimportant.
inline KnowledgeSource chimney_knowledge(const Frame& f = shutter_frame()) {
  return KnowledgeSource("chimney", f, {{Clause::atom(f, "long"), 0.25}, {Clause::atom(f, "next-to"), 0.35}}, 0.4);
}

/// Atoms of the single-window feature frame.
inline constexpr const char* kElong = "elong";
inline constexpr const char* kText = "text";
inline constexpr const char* kLeftBound = "lt-bound";
inline constexpr const char* kRightBound = "rt-bound";

inline Frame window_frame() { return Frame{kElong, kText, kLeftBound, kRightBound}; }

/// Window from shape, texture and boundaries; "bound" is either side.
inline KnowledgeSource window_knowledge(const Frame& f = window_frame()) {
  return KnowledgeSource("window", f,
                         {{Clause::atom(f, kElong), 0.15},
                          {Clause::atom(f, kText), 0.20},
                          {Clause::disjunction(f, {pos(kLeftBound), pos(kRightBound)}), 0.35}},
                         0.3);
}

/// Atoms of the window-in-building frame.
inline constexpr const char* kWindow = "window";
inline constexpr const char* kVSibling = "v-sibl";
inline constexpr const char* kHSibling = "h-sibl";

inline Frame sibling_frame() { return Frame{kWindow, kVSibling, kHSibling}; }

/// Window within a facade from its own belief and aligned neighbours. No mass on THETA.
inline KnowledgeSource sibling_knowledge(const Frame& f = sibling_frame()) {
  return KnowledgeSource("window-in-building", f,
                         {{Clause::atom(f, kWindow), 0.4},
                          {Clause::atom(f, kVSibling), 0.2},
                          {Clause::atom(f, kHSibling), 0.2},
                          {Clause::conjunction(f, {pos(kVSibling), pos(kHSibling)}), 0.2}},
                         0.0);
}

}  // namespace dsv::library

#endif  // DSV_KNOWLEDGE_LIBRARY_HPP
