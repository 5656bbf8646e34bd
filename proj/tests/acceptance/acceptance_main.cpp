// Placeholder; filled in once the full pipeline exists.
#include <cstdio>

int main() {
  std::puts("acceptance suite not yet implemented");
  return 1;
}
