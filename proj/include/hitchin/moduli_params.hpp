#pragma once

#include <string_view>

#include "hitchin/error.hpp"

namespace hitchin {

enum class Group { GL, SL, PGL };

constexpr std::string_view to_string(Group group) noexcept {
  switch (group) {
    case Group::GL: return "GL";
    case Group::SL: return "SL";
    case Group::PGL: return "PGL";
  }
  return "?";
}

struct ModuliParams {
  int rank = 2;
  int degree = 1;
  int genus = 2;
  Group group = Group::SL;

  void validate() const {
    detail::require(rank >= 1, "rank must be positive");
    detail::require_genus(genus);
  }

  /// The rank-2, odd-degree case the Poincaré pipelines are written for.
  void validate_rank2_coprime() const {
    validate();
    detail::require(rank == 2, "Poincaré pipelines need rank 2");
    detail::require(degree % 2 != 0, "Poincaré pipelines need odd degree");
  }
};

}  // namespace hitchin
