#include <ultrarel/extensions.hpp>

int main() {
  const ultrarel::Rel eq = ultrarel::Rel::identity(2);
  return ultrarel::star_ultra(eq) == eq ? 0 : 1;
}
