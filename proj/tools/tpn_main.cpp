#include <iostream>

int main() {
  std::cout << "tpn cli placeholder\n";
  return 0;
}
