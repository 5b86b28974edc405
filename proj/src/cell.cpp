#include "cell.hpp"

namespace dt {

namespace {

std::array<int, 4> matmul(const std::array<int, 4>& a, const std::array<int, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Sym sym_from_matrix(const std::array<int, 4>& m) {
  for (int i = 0; i < kSymCount; ++i) {
    if (detail::kSymMatrix[i] == m) return static_cast<Sym>(i);
  }
  return Sym::Identity;  // unreachable for products of group elements
}

}  // namespace

Sym sym_compose(Sym a, Sym b) {
  return sym_from_matrix(matmul(detail::kSymMatrix[static_cast<int>(a)],
                                detail::kSymMatrix[static_cast<int>(b)]));
}

Sym sym_inverse(Sym g) {
  for (int i = 0; i < kSymCount; ++i) {
    if (sym_compose(g, static_cast<Sym>(i)) == Sym::Identity) return static_cast<Sym>(i);
  }
  return Sym::Identity;
}

std::string_view sym_name(Sym g) {
  switch (g) {
    case Sym::Identity: return "id";
    case Sym::Rot90: return "rot90";
    case Sym::Rot180: return "rot180";
    case Sym::Rot270: return "rot270";
    case Sym::MirrorX: return "mirror-x";
    case Sym::MirrorY: return "mirror-y";
    case Sym::Transpose: return "transpose";
    case Sym::AntiTranspose: return "anti-transpose";
  }
  return "?";
}

}  // namespace dt
