// placeholder; grows with the library
#include <dendro/tree.hpp>

int main() { return 0; }
