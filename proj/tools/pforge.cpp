// pforge CLI: placeholder main, filled in after the library settles.
int main() { return 0; }
