#include <atomic>
#include <string>

#include "kplane/error.hpp"
#include "kplane/kernels/kernels.hpp"

namespace kplane::kernels {

namespace {

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{nullptr};
  return table;
}

const Table& table_for(Isa isa) {
  if (isa == Isa::avx2) {
    if (const Table* t = avx2_table()) return *t;
    throw ParameterError("AVX2 kernels are not available on this machine");
  }
  return scalar_table();
}

}  // namespace

bool isa_available(Isa isa) { return isa == Isa::scalar || avx2_table() != nullptr; }

Isa best_isa() { return avx2_table() ? Isa::avx2 : Isa::scalar; }

const Table& active() {
  const Table* t = current().load(std::memory_order_acquire);
  if (!t) {
    t = &table_for(best_isa());
    current().store(t, std::memory_order_release);
  }
  return *t;
}

Isa active_isa() { return &active() == &scalar_table() ? Isa::scalar : Isa::avx2; }

void select_isa(Isa isa) { current().store(&table_for(isa), std::memory_order_release); }

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace kplane::kernels
