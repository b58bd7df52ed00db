#include "hopfmod/fixtures.hpp"

namespace hopfmod {

HopfPtr trivial_hopf(Field f) { return group_algebra(f, {{0}}); }

FinAlgebra truncated_polynomial(Field f, std::size_t n) {
  FinAlgebra a{f, n, Matrix(f, n, n * n), Matrix::unit_vector(f, n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) a.mult(i + j, i * n + j) = Scalar::one(f);
  return a;
}

AlgebraPtr graded_truncated(const HopfPtr& kc2, std::size_t n) {
  const Field f = kc2->field();
  Matrix rho(f, n * 2, n);
  for (std::size_t i = 0; i < n; ++i) rho(i * 2 + i % 2, i) = Scalar::one(f);
  auto v = validate_comodule_algebra(truncated_polynomial(f, n), Comodule{kc2, n, rho});
  if (!v.ok()) throw std::logic_error("graded truncated polynomial algebra failed validation");
  return v.algebra;
}

RelHopfModule graded_quotient(const AlgebraPtr& a, std::size_t k) {
  const Field f = a->field();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix l(f, k, k);
    for (std::size_t j = 0; i + j < k; ++j) l(i + j, j) = Scalar::one(f);
    action.push_back(std::move(l));
  }
  Matrix rho(f, k * 2, k);
  for (std::size_t j = 0; j < k; ++j) rho(j * 2 + j % 2, j) = Scalar::one(f);
  return make_relhopf(a, std::move(action), std::move(rho));
}

BModule augmentation_bmodule(const AlgebraPtr& a) {
  const Field f = a->field();
  BModule p{a, 1, {}};
  const Matrix& b = a->coinvariants().basis();
  for (std::size_t t = 0; t < b.cols(); ++t) {
    Matrix l(f, 1, 1);
    l(0, 0) = b(0, t);
    p.action.push_back(std::move(l));
  }
  return p;
}

RelHopfModule one_dim_module(const AlgebraPtr& k_algebra, std::size_t h_index) {
  const Field f = k_algebra->field();
  return make_relhopf(k_algebra, {Matrix::identity(f, 1)}, Matrix::unit_vector(f, k_algebra->hopf()->dim(), h_index));
}

RawHopfData zero_antipode(const HopfAlgebra& h) {
  RawHopfData raw = h.raw();
  raw.antipode = Matrix(h.field(), h.dim(), h.dim());
  return raw;
}

Comodule broken_grading(const AlgebraPtr& graded) {
  Comodule c = graded->coaction();
  c.coaction(1 * 2 + 1, 1) = Scalar::zero(c.field());
  c.coaction(1 * 2 + 0, 1) = Scalar::one(c.field());
  return c;
}

namespace {

RawInstance build_raw(const std::string& file) {
  const Field q = Field::rationals();
  if (file == "triv.hm") {
    const HopfPtr k = trivial_hopf(q);
    const AlgebraPtr a = regular_comodule_algebra(k);
    InstanceWriter w(q);
    w.hopf("K", *k).algebra("A", "K", *a).module("M", "A", regular_module(a)).bmodule("P", "A", regular_bmodule(a));
    return w.raw();
  }
  if (file == "kc2.hm") {
    const HopfPtr h = cyclic_group_algebra(q, 2);
    const AlgebraPtr k = trivial_comodule_algebra(h);
    InstanceWriter w(q);
    w.hopf("KC2", *h)
        .algebra("K", "KC2", *k)
        .module("K1", "K", one_dim_module(k, 0))
        .module("Kg", "K", one_dim_module(k, 1))
        .bmodule("P", "K", regular_bmodule(k));
    return w.raw();
  }
  if (file == "kc2f2.hm") {
    const Field f2 = Field::prime(2);
    const HopfPtr h = cyclic_group_algebra(f2, 2);
    const AlgebraPtr hh = regular_comodule_algebra(h);
    const AlgebraPtr a4 = graded_truncated(h, 4);
    const RelHopfModule m = regular_module(hh);
    InstanceWriter w(f2);
    w.hopf("KC2", *h)
        .algebra("HH", "KC2", *hh)
        .module("M", "HH", m)
        .module("HH2", "HH", direct_sum(m, m))
        .algebra("A4", "KC2", *a4)
        .module("A", "A4", regular_module(a4))
        .module("M2", "A4", graded_quotient(a4, 2))
        .bmodule("Bt", "A4", augmentation_bmodule(a4));
    return w.raw();
  }
  if (file == "hh.hm") {
    const HopfPtr h = cyclic_group_algebra(q, 2);
    const AlgebraPtr hh = regular_comodule_algebra(h);
    const RelHopfModule m = regular_module(hh);
    InstanceWriter w(q);
    w.hopf("KC2", *h)
        .algebra("HH", "KC2", *hh)
        .module("M", "HH", m)
        .module("HH2", "HH", direct_sum(m, m))
        .module("MD", "HH", tensor_with_comodule(m, regular_comodule(h)))
        .bmodule("K", "HH", regular_bmodule(hh))
        .bmodule("K2", "HH", free_bmodule(hh, 2));
    return w.raw();
  }
  if (file == "a4.hm") {
    const HopfPtr h = cyclic_group_algebra(q, 2);
    const AlgebraPtr a4 = graded_truncated(h, 4);
    const AlgebraPtr k = trivial_comodule_algebra(h);
    InstanceWriter w(q);
    w.hopf("KC2", *h)
        .algebra("A4", "KC2", *a4)
        .module("A", "A4", regular_module(a4))
        .module("M2", "A4", graded_quotient(a4, 2))
        .bmodule("B", "A4", regular_bmodule(a4))
        .bmodule("Bt", "A4", augmentation_bmodule(a4))
        .algebra("K", "KC2", *k)
        .module("Kg", "K", one_dim_module(k, 1));
    return w.raw();
  }
  if (file == "sw4.hm") {
    const HopfPtr h = sweedler_h4(q);
    const AlgebraPtr k = trivial_comodule_algebra(h);
    const AlgebraPtr hh = regular_comodule_algebra(h);
    InstanceWriter w(q);
    w.hopf("SW4", *h)
        .algebra("K", "SW4", *k)
        .module("K1", "K", one_dim_module(k, 0))
        .bmodule("P", "K", regular_bmodule(k))
        .algebra("H", "SW4", *hh)
        .module("M", "H", regular_module(hh));
    return w.raw();
  }
  throw std::invalid_argument("unknown fixture file '" + file + "'");
}

}  // namespace

const std::vector<NamedFixture>& named_fixtures() {
  static const std::vector<NamedFixture> all{
      {"TRIV", "triv.hm", BlockKind::algebra, "A"},     {"KC2", "kc2.hm", BlockKind::hopf, "KC2"},
      {"KC2F2", "kc2f2.hm", BlockKind::hopf, "KC2"},    {"HH", "hh.hm", BlockKind::algebra, "HH"},
      {"A4", "a4.hm", BlockKind::algebra, "A4"},        {"M2", "a4.hm", BlockKind::module, "M2"},
      {"SW4", "sw4.hm", BlockKind::hopf, "SW4"},        {"HH2", "hh.hm", BlockKind::module, "HH2"},
  };
  return all;
}

std::vector<std::string> fixture_files() { return {"triv.hm", "kc2.hm", "kc2f2.hm", "hh.hm", "a4.hm", "sw4.hm"}; }

RawInstance fixture_raw(const std::string& file) { return build_raw(file); }

std::string fixture_text(const std::string& file) { return serialize(build_raw(file)); }

}  // namespace hopfmod
