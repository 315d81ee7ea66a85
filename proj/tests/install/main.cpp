#include <vpv/totients.hpp>

#include <iostream>

int main() {
  const bool ok = vpv::jordan(2, 4) == 12;
  std::cout << (ok ? "ok" : "wrong") << '\n';
  return ok ? 0 : 1;
}
