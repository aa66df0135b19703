// Builds F_2 over P_4, confirms it has no P_5, then colours it.
#include <iostream>

#include "pkfree/pkfree.hpp"

int main() {
  using namespace pkfree;
  Tournament f2 = family({path_tournament(4), 2});
  std::cout << "F_2 over P_4: " << f2.size() << " vertices\n";
  std::cout << "contains P_5: " << (find_pk_exhaustive(f2, 5) ? "yes" : "no") << '\n';
  std::cout << "largest transitive subset: " << max_transitive_exact(f2).size() << '\n';

  ConstantSchedule schedule = schedule_for(5, Mode::relaxed, Rational(1, 4));
  Trace trace;
  Coloring c = acyclic_coloring(f2, schedule, &trace);
  std::cout << "colour classes: " << c.count() << (verify_coloring(f2, c) ? " (verified)" : " (INVALID)") << '\n';
  for (const auto& cls : c.classes) {
    std::cout << " ";
    for (Vertex v : cls) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return verify_coloring(f2, c) ? 0 : 1;
}
