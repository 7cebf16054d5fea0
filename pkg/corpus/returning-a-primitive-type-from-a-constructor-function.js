var Dog = function () {
  this.name = 'milou';
  return 3; // this statement is ignored
}

var dog = new Dog();
dog; // answers {name: 'milou'}
